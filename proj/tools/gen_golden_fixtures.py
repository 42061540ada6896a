#!/usr/bin/env python3
"""Write data/golden/q_d{d}_{l}{m}.hwmat from a hand transcription of the
d=3 and d=4 HW observable tables.

Notation: c = chi = (1+i)/2, C = conj(chi), w = omega = exp(2 pi i/d),
W = conj(omega), i, 1, 0; terms joined by '+', optional leading '-'.
Tables marked scaled carry an overall 1/sqrt(2).
"""
import argparse
import cmath
import json
import math
import pathlib

D3 = {
    (0, 0): "1 0 0 | 0 1 0 | 0 0 1",
    (0, 1): "0 C c | c 0 C | C c 0",
    (0, 2): "0 c C | C 0 c | c C 0",
    (1, 0): "c+C 0 0 | 0 cw+CW 0 | 0 0 cW+Cw",
    (1, 1): "0 -Cw -cw | -cW 0 -C | -CW -c 0",
    (1, 2): "0 cW CW | Cw 0 c | cw C 0",
    (2, 0): "c+C 0 0 | 0 cW+Cw 0 | 0 0 cw+CW",
    (2, 1): "0 CW cW | cw 0 C | Cw c 0",
    (2, 2): "0 cw Cw | CW 0 c | cW C 0",
}

D4 = {
    (0, 0): (False, "1 0 0 0 | 0 1 0 0 | 0 0 1 0 | 0 0 0 1"),
    (0, 1): (False, "0 C 0 c | c 0 C 0 | 0 c 0 C | C 0 c 0"),
    (0, 2): (False, "0 0 1 0 | 0 0 0 1 | 1 0 0 0 | 0 1 0 0"),
    (0, 3): (False, "0 c 0 C | C 0 c 0 | 0 C 0 c | c 0 C 0"),
    (1, 0): (False, "1 0 0 0 | 0 -1 0 0 | 0 0 -1 0 | 0 0 0 1"),
    (1, 1): (True, "0 -i 0 1 | i 0 -1 0 | 0 -1 0 i | 1 0 -i 0"),
    (1, 2): (False, "0 0 -i 0 | 0 0 0 i | i 0 0 0 | 0 -i 0 0"),
    (1, 3): (True, "0 -i 0 -1 | i 0 1 0 | 0 1 0 i | -1 0 -i 0"),
    (2, 0): (False, "1 0 0 0 | 0 -1 0 0 | 0 0 1 0 | 0 0 0 -1"),
    (2, 1): (False, "0 -c 0 C | -C 0 c 0 | 0 C 0 -c | c 0 -C 0"),
    (2, 2): (False, "0 0 -1 0 | 0 0 0 1 | -1 0 0 0 | 0 1 0 0"),
    (2, 3): (False, "0 -C 0 c | -c 0 C 0 | 0 c 0 -C | C 0 -c 0"),
    (3, 0): (False, "1 0 0 0 | 0 1 0 0 | 0 0 -1 0 | 0 0 0 -1"),
    (3, 1): (True, "0 -1 0 -i | -1 0 -i 0 | 0 i 0 1 | i 0 1 0"),
    (3, 2): (False, "0 0 i 0 | 0 0 0 i | -i 0 0 0 | 0 -i 0 0"),
    (3, 3): (True, "0 1 0 -i | 1 0 -i 0 | 0 i 0 -1 | i 0 -1 0"),
}


def evaluate(entry, d):
    chi = (1 + 1j) / 2
    omega = cmath.exp(2j * math.pi / d)
    symbols = {"c": chi, "C": chi.conjugate(), "w": omega, "W": omega.conjugate(), "i": 1j, "1": 1, "0": 0}
    total = 0j
    for term in entry.split("+"):
        value = 1 + 0j
        for ch in term:
            value = -value if ch == "-" else value * symbols[ch]
        total += value
    return total


def table(text, d, scaled):
    rows = [r.split() for r in text.split("|")]
    assert len(rows) == d and all(len(r) == d for r in rows)
    scale = 1 / math.sqrt(2) if scaled else 1.0
    return [evaluate(e, d) * scale for r in rows for e in r]


def write(out_dir, d, l, m, entries):
    doc = {
        "format": "hwobs.matrix",
        "schema_version": "1",
        "rows": d,
        "cols": d,
        "entries": [[z.real, z.imag] for z in entries],
        "metadata": {"kind": "hw_observable", "d": str(d), "point": f"({l},{m})"},
    }
    path = out_dir / f"q_d{d}_{l}{m}.hwmat"
    path.write_text(json.dumps(doc, indent=2) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "golden"))
    args = parser.parse_args()
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for (l, m), text in D3.items():
        write(out_dir, 3, l, m, table(text, 3, False))
    for (l, m), (scaled, text) in D4.items():
        write(out_dir, 4, l, m, table(text, 4, scaled))


if __name__ == "__main__":
    main()
