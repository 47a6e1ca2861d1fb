#!/usr/bin/env python3
"""Builds the tagger fixture files from data/fixtures/annotations.txt.

Outputs (all under data/):
  fixtures/tags.jsonl       wire records for every annotated sentence
  seed/seed_pairs.jsonl     {"declarative", "interrogative"} per D/Q pair
  fixtures/corpus100.jsonl  100 template sentences for throughput and
                            corpus-wide checks (fixed RNG seed)
"""

import argparse
import json
import random
import sys
from pathlib import Path

NO_SPACE_BEFORE = {",", ".", ";", ":", "!", "?", "%", ")", "]", "}", "''",
                   "'s", "'", "n't", "'re", "'ve", "'ll", "'d", "'m", "..."}
NO_SPACE_AFTER = {"(", "[", "{", "$", "``"}


def join_tokens(words):
    out = ""
    prev = None
    for w in words:
        if out and w not in NO_SPACE_BEFORE and prev not in NO_SPACE_AFTER:
            out += " "
        out += w
        prev = w
    return out


def parse_token(tok):
    parts = tok.rsplit("/", 3)
    if len(parts) != 4:
        raise ValueError(f"bad token {tok!r}")
    word, pos, ner, srl = parts
    labels = [s or None for s in srl.split("|")]
    return word, pos, ner or None, labels


def record(tokens):
    parsed = [parse_token(t) for t in tokens]
    frames = max(len(p[3]) for p in parsed)
    for word, _, _, labels in parsed:
        if len(labels) != frames:
            if len(labels) == 1 and labels[0] is None:
                labels.extend([None] * (frames - 1))
            else:
                raise ValueError(f"{word!r}: {len(labels)} SRL columns, expected {frames}")
    return {
        "text": join_tokens([p[0] for p in parsed]),
        "tokens": [{"t": w, "pos": p, "ner": n, "srl": l} for w, p, n, l in parsed],
        "frames": frames,
    }


def read_annotations(path):
    records, pairs = [], []
    pending = None
    for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, _, body = line.partition(" ")
        try:
            rec = record(body.split())
        except ValueError as e:
            sys.exit(f"{path}:{line_no}: {e}")
        records.append(rec)
        if kind == "D":
            pending = rec["text"]
        elif kind == "Q":
            if pending is None:
                sys.exit(f"{path}:{line_no}: Q without a preceding D")
            pairs.append({"declarative": pending, "interrogative": rec["text"]})
            pending = None
        elif kind != "S":
            sys.exit(f"{path}:{line_no}: unknown line kind {kind!r}")
    return records, pairs


# Template corpus. Each part is a list of word/POS/NER triples; SRL labels
# are attached by the template.
SUBJECTS = [
    [("Anna", "NNP", "PER")],
    [("Peter", "NNP", "PER")],
    [("Professor", "NNP", "PER"), ("Kim", "NNP", "PER")],
    [("The", "DT", ""), ("doctors", "NNS", "")],
    [("The", "DT", ""), ("engineer", "NN", "")],
    [("My", "PRP$", ""), ("neighbor", "NN", "")],
    [("The", "DT", ""), ("tourists", "NNS", "")],
    [("Our", "PRP$", ""), ("teacher", "NN", "")],
]
CITIES = ["Boston", "Madrid", "Tokyo", "Cairo", "Lima", "Oslo", "Denver"]
TRAVEL = [("flew", "VBD"), ("traveled", "VBD"), ("moved", "VBD"), ("went", "VBD")]
PERIODS = ["week", "month", "year"]
BUY = [("bought", "VBD"), ("sold", "VBD"), ("painted", "VBD"), ("repaired", "VBD"),
       ("found", "VBD")]
THINGS = [("car", "NN"), ("bike", "NN"), ("lamp", "NN"), ("house", "NN"), ("boat", "NN")]
ADJS = ["new", "cheap", "small", "red"]
CREATE = [("discovered", "VBD"), ("invented", "VBD"), ("designed", "VBD"),
          ("built", "VBD")]
CREATIONS = [("vaccine", "NN"), ("engine", "NN"), ("telescope", "NN"), ("machine", "NN")]
WIN = [("won", "VBD"), ("lost", "VBD"), ("played", "VBD")]
COUNTS = ["three", "five", "seven", "two"]
GAMES = [("games", "NNS"), ("matches", "NNS")]
MONTHS = ["March", "April", "June", "October"]
OPEN = [("opens", "VBZ"), ("closes", "VBZ"), ("locks", "VBZ")]
PLACES = [("museum", "NN"), ("bakery", "NN"), ("library", "NN"), ("school", "NN")]
TIMES = ["midnight", "noon", "dawn"]
REASONS = [("needed", "VBD", "money"), ("wanted", "VBD", "space"),
           ("lost", "VBD", "interest")]


def tok(word, pos, ner, *labels):
    return f"{word}/{pos}/{ner}/" + "|".join(labels)


def subject(rng, frames=1, second=None):
    subj = rng.choice(SUBJECTS)
    labels = ["ARG0"] + [second or ""] * (frames - 1)
    return [tok(w, p, n, *labels) for w, p, n in subj]


def sentence_travel(rng):
    verb, vpos = rng.choice(TRAVEL)
    return subject(rng) + [
        tok(verb, vpos, "", "V"), tok("to", "IN", "", "ARG1"),
        tok(rng.choice(CITIES), "NNP", "LOC", "ARG1"),
        tok("last", "NN", "", "TMP"), tok(rng.choice(PERIODS), "NN", "", "TMP"),
    ]


def sentence_buy(rng):
    verb, vpos = rng.choice(BUY)
    thing, tpos = rng.choice(THINGS)
    return subject(rng) + [
        tok(verb, vpos, "", "V"), tok("a", "DT", "", "ARG1"),
        tok(rng.choice(ADJS), "JJ", "", "ARG1"), tok(thing, tpos, "", "ARG1"),
    ]


def sentence_create(rng):
    verb, vpos = rng.choice(CREATE)
    thing, tpos = rng.choice(CREATIONS)
    return subject(rng) + [
        tok(verb, vpos, "", "V"), tok("the", "DT", "", "ARG1"),
        tok(thing, tpos, "", "ARG1"), tok("in", "IN", "", "TMP"),
        tok(str(rng.randint(1850, 2020)), "CD", "DATE", "TMP"),
    ]


def sentence_win(rng):
    verb, vpos = rng.choice(WIN)
    games, gpos = rng.choice(GAMES)
    return subject(rng) + [
        tok(verb, vpos, "", "V"), tok(rng.choice(COUNTS), "CD", "CARDINAL", "ARG1"),
        tok(games, gpos, "", "ARG1"), tok("in", "IN", "", "TMP"),
        tok(rng.choice(MONTHS), "NNP", "DATE", "TMP"),
    ]


def sentence_open(rng):
    verb, vpos = rng.choice(OPEN)
    place, ppos = rng.choice(PLACES)
    return [tok("The", "DT", "", "ARG0"), tok(place, ppos, "", "ARG0"),
            tok(verb, vpos, "", "V"), tok("its", "PRP$", "", "ARG1"),
            tok("doors", "NNS", "", "ARG1"), tok("at", "IN", "", "TMP"),
            tok(rng.choice(TIMES), "NN", "", "TMP")]


def sentence_why(rng):
    verb, vpos = rng.choice(BUY)
    thing, tpos = rng.choice(THINGS)
    reason, rpos, obj = rng.choice(REASONS)
    return subject(rng, frames=2) + [
        tok(verb, vpos, "", "V", ""), tok("his", "PRP$", "", "ARG1", ""),
        tok(thing, tpos, "", "ARG1", ""), tok("because", "IN", "", "CAU", ""),
        tok("he", "PRP", "", "CAU", "ARG0"), tok(reason, rpos, "", "CAU", "V"),
        tok(obj, "NN", "", "CAU", "ARG1"),
    ]


def sentence_manner(rng):
    # No seed pattern has a manner argument ahead of the verb.
    verb, vpos = rng.choice(BUY)
    thing, tpos = rng.choice(THINGS)
    return subject(rng) + [
        tok("quickly", "RB", "", "MNR"), tok(verb, vpos, "", "V"),
        tok("the", "DT", "", "ARG1"), tok(thing, tpos, "", "ARG1"),
    ]


TEMPLATES = [sentence_travel, sentence_buy, sentence_create, sentence_win,
             sentence_open, sentence_why, sentence_manner]


def corpus(n, seed):
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < n:
        tokens = rng.choice(TEMPLATES)(rng)
        frames = tokens[0].rsplit("/", 1)[1].count("|") + 1
        tokens.append("././/" + "|" * (frames - 1))
        rec = record(tokens)
        if rec["text"] in seen:
            continue
        seen.add(rec["text"])
        out.append(rec)
    return out


def write_jsonl(path, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    root = Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", type=Path, default=root / "data")
    ap.add_argument("--seed", type=int, default=20140714)
    args = ap.parse_args()

    records, pairs = read_annotations(args.data / "fixtures" / "annotations.txt")
    write_jsonl(args.data / "fixtures" / "tags.jsonl", records)
    write_jsonl(args.data / "seed" / "seed_pairs.jsonl", pairs)
    write_jsonl(args.data / "fixtures" / "corpus100.jsonl", corpus(100, args.seed))
    print(f"{len(records)} annotated sentences, {len(pairs)} seed pairs, 100 corpus sentences")


if __name__ == "__main__":
    main()
