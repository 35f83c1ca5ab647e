"""Deterministic DSL fuzz cases: corpus mutations plus random token soup."""

import random

from golden import corpus_files

TOKENS = ["convention", "presentation", "coxeter", "vertices", "edge", "inf", "a", "b", "c", "t1", "t2",
          "0", "1", "2", "3", "-4", "99999999999999999999", "3.5", ";", "#", "\n", " ", "\t", "é", "\x00",
          "edge a a 3", "vertices a a", "(", ")", "{", "}", "=", "\r\n"]


def fuzz_cases(count=10_000, seed=2024):
    rng = random.Random(seed)
    seeds = [p.read_text() for p in corpus_files()]
    for i in range(count):
        mode = i % 3
        if mode == 0:
            yield "".join(rng.choice(TOKENS) + rng.choice(" \n;") for _ in range(rng.randint(0, 20)))
        elif mode == 1:
            text = list(rng.choice(seeds))
            for _ in range(rng.randint(1, 6)):
                op = rng.randrange(3)
                pos = rng.randrange(len(text) + 1)
                if op == 0 and text:
                    del text[min(pos, len(text) - 1)]
                elif op == 1:
                    text.insert(pos, rng.choice(TOKENS))
                elif text:
                    text[min(pos, len(text) - 1)] = chr(rng.randrange(32, 127))
            yield "".join(text)
        else:
            yield "".join(chr(rng.randrange(0, 256)) for _ in range(rng.randint(0, 60)))
