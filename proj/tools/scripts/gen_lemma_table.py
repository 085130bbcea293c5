#!/usr/bin/env python3
"""Regenerates core/data/lemmas_en.tsv from the lemminflect lookup table.

Only words whose lemma differs from what the C++ suffix-stripping fallback
(textproc/lemmatize.cpp) would produce are written out, so the shipped table
and the fallback together reproduce the full lookup.

usage: gen_lemma_table.py path/to/lemma_lu.csv.gz > core/data/lemmas_en.tsv
"""
import gzip
import re
import sys

POS_ORDER = ["noun", "verb", "aux", "adj", "adv"]
VOWELS = "aeiou"


def undouble(stem):
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in VOWELS + "lsz":
        return stem[:-1]
    return stem


def fallback(word):
    if len(word) <= 3:
        return word
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    if word.endswith("ing") and len(word) >= 6:
        return undouble(word[:-3])
    if word.endswith("ed") and len(word) >= 5:
        return undouble(word[:-2])
    return word


def main():
    entries = {}
    with gzip.open(sys.argv[1], "rt") as f:
        for line in f:
            parts = line.strip().split(",")
            if len(parts) < 3:
                continue
            word, pos, lemma = parts[0], parts[1], parts[2].split("/")[0]
            if pos not in POS_ORDER:
                continue
            if not re.fullmatch(r"[a-z]+", word) or not re.fullmatch(r"[a-z]+", lemma):
                continue
            entries.setdefault(word, {})[pos] = lemma

    def lemma_of(word):
        by_pos = entries[word]
        for pos in POS_ORDER:
            if pos in by_pos and by_pos[pos] != word:
                return by_pos[pos]
        return word

    print("# English inflection -> lemma, tab separated. Only entries the suffix-stripping")
    print("# fallback gets wrong are listed. Generated by tools/scripts/gen_lemma_table.py")
    print("# from lemminflect 0.2.3 (MIT License, Copyright (C) 2019 Brad Jascob).")
    for word in sorted(entries):
        lemma = lemma_of(word)
        if fallback(word) != lemma:
            print(f"{word}\t{lemma}")


if __name__ == "__main__":
    main()
