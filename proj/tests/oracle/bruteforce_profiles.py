#!/usr/bin/env python3
"""Brute-force reference for the assumption profiles.

Reads a multi-wordnet JSONL file and evaluates every predicate by direct
set enumeration over the raw records. Deliberately shares no code with the
C++ library; the acceptance suite diffs its output against the CLI.

Usage:
    bruteforce_profiles.py WORDNET.jsonl SRC TGT            # full report (JSON)
    bruteforce_profiles.py WORDNET.jsonl SRC TGT LEMMA POS  # one profile (JSON)
"""
import json
import sys
from fractions import Fraction
from itertools import combinations


def load(path):
    synsets = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            words = frozenset((w["lang"], w["lemma"], rec["pos"]) for w in rec["words"])
            synsets.append((rec["id"], rec["pos"], words))
    return synsets


def senses_of(synsets, word):
    return sorted(sid for sid, _pos, words in synsets if word in words)


def words_of(synsets, sid):
    for s, _pos, words in synsets:
        if s == sid:
            return words
    raise KeyError(sid)


def trans_of_sense(synsets, sid, lang):
    return frozenset(lemma for (l, lemma, _p) in words_of(synsets, sid) if l == lang)


def profile(synsets, src_lang, tgt_lang, lemma, pos):
    e = (src_lang, lemma, pos)
    S = senses_of(synsets, e)
    if not S:
        raise SystemExit(f"word not in wordnet: {src_lang}:{lemma}:{pos}")
    T = {s: trans_of_sense(synsets, s, tgt_lang) for s in S}
    T_e = sorted(set().union(*T.values()))
    C = {f: frozenset(s for s in S if f in T[s]) for f in T_e}

    ospt = all(not (T[s1] & T[s2]) for s1, s2 in combinations(S, 2))
    psa = all(len(C[f]) == 1 for f in T_e)
    otps = all(len(T[s]) <= 1 for s in S)
    spa = all(not (C[f1] & C[f2]) for f1, f2 in combinations(T_e, 2))
    ssa = all(len(C[f1] | C[f2]) == 1 for f1, f2 in combinations(T_e, 2))
    gsa = sum(1 for s in S if T[s]) <= 1
    single_valued = all(len(C[f]) == 1 for f in T_e)
    injective = all(C[f1] != C[f2] for f1, f2 in combinations(T_e, 2))
    gpa = single_valued and injective
    nolg = all(len(T[s]) >= 1 for s in S)
    ocpw = len(S) == 1
    eligible = len(S) >= 2 and len(T_e) >= 1
    partners = sorted(f for f in T_e if len(C[f]) >= 2)

    return {
        "word": {"lang": src_lang, "lemma": lemma, "pos": pos},
        "direction": {"source": src_lang, "target": tgt_lang},
        "sense_count": len(S),
        "translation_count": len(T_e),
        "eligible": eligible,
        "flags": {
            "ospt": ospt, "psa": psa, "otps": otps, "spa": spa, "ssa": ssa,
            "gsa": gsa, "gpa": gpa, "nolg": nolg, "ocpw": ocpw,
        },
        "parallel_polysemy_partners": partners,
    }


def pct(count, total):
    # one decimal, round half to even, as a string
    tenths = Fraction(count * 1000, total)
    q, r = divmod(tenths.numerator, tenths.denominator)
    if 2 * r > tenths.denominator or (2 * r == tenths.denominator and q % 2 == 1):
        q += 1
    return f"{q // 10}.{q % 10}"


def full_report(synsets, src_lang, tgt_lang):
    src_words = sorted({w for _sid, _pos, words in synsets for w in words if w[0] == src_lang})
    profiles = {}
    for (lang, lemma, pos) in src_words:
        profiles[f"{lemma}:{pos}"] = profile(synsets, src_lang, tgt_lang, lemma, pos)

    eligible = [p for p in profiles.values() if p["eligible"]]
    report = {"direction": {"source": src_lang, "target": tgt_lang}, "profiles": profiles}
    if eligible:
        n = len(eligible)
        t1 = {}
        for key, flag in [("OSPT/PSA", "ospt"), ("OTPS/SPA", "otps"), ("GPA", "gpa"),
                          ("SSA", "ssa"), ("GSA", "gsa"), ("NoLG", "nolg")]:
            t1[key] = pct(sum(1 for p in eligible if p["flags"][flag]), n)
        cells = {}
        for p in eligible:
            key = (p["flags"]["ospt"], p["flags"]["otps"], p["flags"]["nolg"])
            cells[key] = cells.get(key, 0) + 1
        t2 = []
        for ospt in (False, True):
            for otps in (False, True):
                for nolg in (False, True):
                    t2.append({"ospt": ospt, "otps": otps, "nolg": nolg,
                               "percent": pct(cells.get((ospt, otps, nolg), 0), n)})
        report["eligible_word_count"] = n
        report["eligible_words"] = sorted(f'{p["word"]["lemma"]}:{p["word"]["pos"]}' for p in eligible)
        report["table1"] = t1
        report["table2"] = t2

    # global predicates, by direct scan
    report["owpc_violations"] = {
        lang: sorted(sid for sid, _p, words in synsets
                     if sum(1 for w in words if w[0] == lang) >= 2)
        for lang in sorted({w[0] for _s, _p, ws in synsets for w in ws})
    }
    report["gap_covered"] = {
        f"{covered}_by_{by}": all(any(w[0] == by for w in words)
                                  for _sid, _p, words in synsets
                                  if any(w[0] == covered for w in words))
        for covered in ("fr", "it", "en") for by in ("fr", "it", "en") if covered != by
    }
    return report


def main():
    synsets = load(sys.argv[1])
    src, tgt = sys.argv[2], sys.argv[3]
    if len(sys.argv) > 4:
        out = profile(synsets, src, tgt, sys.argv[4], sys.argv[5])
    else:
        out = full_report(synsets, src, tgt)
    print(json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False))


if __name__ == "__main__":
    main()
