#!/usr/bin/env python3
# Copyright 2026 The lexidyn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/sample/eng-1gram-sample.tsv.gz.

Word inventory and base frequencies come from the `wordfreq` English list
(real usage frequencies). Yearly counts are synthesized from those base
frequencies with a smooth length-dependent drift and multiplicative noise,
so the file exercises the full pipeline at realistic scale. It is not a
copy of any published corpus snapshot.

    pip install wordfreq
    python3 tools/make_sample.py data/sample/eng-1gram-sample.tsv.gz
"""

import gzip
import math
import random
import re
import sys

import wordfreq

YEARS = range(1800, 2009)
VOCAB = 12000
SEED = 20120406

PRONOUNS = {"i", "he", "she", "it", "we", "you", "they", "me", "him", "her",
            "us", "them", "his", "my", "our", "your", "their"}


def trend(year):
    # flat through the 19th century, linear rise to 1995, then decline
    if year <= 1900:
        return 0.0
    if year <= 1995:
        return (year - 1900) / 95.0
    return 1.0 - 0.3 * (year - 1995) / 13.0


def year_total(year):
    return 1.5e6 * math.exp((year - 1800) * math.log(40.0) / 208.0)


def main(out_path):
    rng = random.Random(SEED)
    words = [w for w in wordfreq.top_n_list("en", VOCAB * 2)
             if re.fullmatch(r"[a-z']+", w) and re.search("[a-z]", w)][:VOCAB]

    entries = []  # (token, base_freq, drift)
    for w in words:
        f = wordfreq.word_frequency(w, "en")
        token = "I" if w == "i" else w.replace("i'", "I'") if w.startswith("i'") else w
        if w in PRONOUNS:
            drift = -0.35
        else:
            drift = 0.12 * (len(w) - 5) / 3.0 + rng.gauss(0.0, 0.08)
        entries.append((token, f, drift))
        if rng.random() < 0.05 and w not in PRONOUNS:
            entries.append((token.capitalize(), f * 0.08, drift))

    junk = ["1850", "3.14", "1,000", ",", ".", ";", "--", "the_DET", "run_VERB",
            "a_DET", "_NOUN_", "x86", "42nd", "&", "$", "(", ")", "p."]

    lines = []
    for token, f, drift in entries:
        for year in YEARS:
            m = math.exp(drift * trend(year) + rng.gauss(0.0, 0.05))
            count = int(round(year_total(year) * f * m))
            if count <= 0:
                continue
            volumes = max(1, min(count, int(count ** 0.7)))
            lines.append((token, year, count, volumes))
    for token in junk:
        for year in YEARS:
            count = int(year_total(year) * 1e-3 * rng.uniform(0.5, 1.5))
            lines.append((token, year, count, max(1, count // 50)))

    lines.sort(key=lambda r: (r[0].encode("utf-8"), r[1]))
    with gzip.open(out_path, "wt", encoding="utf-8", newline="\n", compresslevel=9) as out:
        for token, year, count, volumes in lines:
            out.write(f"{token}\t{year}\t{count}\t{volumes}\n")
    print(f"{len(lines)} lines written to {out_path}", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sample/eng-1gram-sample.tsv.gz")
