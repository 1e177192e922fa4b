"""Correction branch meets the next logical gate.

A 9-qubit circuit measures a stand-in syndrome, conditionally applies X on
one data qubit, then applies a logical Z as X on every qubit. Expansion
moves the logical gate into the correction branch, where the two X gates on
the corrected qubit cancel.

Run: python demos/qec_correction.py
"""

from dyncirc.qec import qec_report


def main():
    for j in (0, 4, 8):
        rep = qec_report(j)
        b, p = rep["baseline"], rep["pipeline"]
        print(f"j={j}: if-path {b['if']} -> {p['if']}, else-path {b['else']} -> {p['else']}, "
              f"equivalent={rep['verified']}")


if __name__ == "__main__":
    main()
