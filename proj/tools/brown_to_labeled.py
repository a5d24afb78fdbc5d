#!/usr/bin/env python3
"""Convert the NLTK Brown corpus to the labeled-sentence TSV format.

Writes one line per sentence: `category<TAB>space-separated tokens`.
Categories are the Brown section names (news, editorial, romance, ...);
the training tool maps one category to the positive class and can
exclude others (e.g. `--news-category news --exclude editorial`).

Usage:
    python3 tools/brown_to_labeled.py brown.tsv
    VIRALTEXT_BROWN=brown.tsv ./build/tests/acceptance

Requires `nltk` with the `brown` corpus data downloaded
(`python3 -m nltk.downloader brown`).
"""

import argparse
import sys


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("output", help="path of the TSV file to write")
    args = parser.parse_args()

    try:
        from nltk.corpus import brown
    except ImportError:
        print("error: nltk is not installed (pip install nltk)", file=sys.stderr)
        return 1

    n = 0
    with open(args.output, "w", encoding="utf-8") as out:
        for category in sorted(brown.categories()):
            for sentence in brown.sents(categories=category):
                tokens = [t.lower() for t in sentence if any(c.isalnum() for c in t)]
                if not tokens:
                    continue
                out.write(f"{category}\t{' '.join(tokens)}\n")
                n += 1
    print(f"wrote {n} sentences to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
