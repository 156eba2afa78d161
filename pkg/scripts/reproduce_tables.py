"""Print the resource tables next to the published exponents.

    python scripts/reproduce_tables.py [--eps 0.01] [--csv out.csv]
"""
import argparse
import sys
from pathlib import Path

from mqattack.estimate import table_report, table_rows

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from published import TABLE_ROWS  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eps", type=float, default=0.01)
    ap.add_argument("--csv", help="also write the CSV report here")
    args = ap.parse_args()

    print(f"{'family':8} {'params':22} {'n':>6} {'r':>6} {'T':>7} {'simpl':>7} {'exact':>7} {'pub':>6}  diff")
    for st, simp, ex in table_rows("all", args.eps):
        key = (st.family, tuple(st.params.values()))
        pub = TABLE_ROWS.get(key, (None,) * 4)[3]
        diff = f"{simp.log2_value - pub:+.2f}" if pub is not None else ""
        print(f"{st.family:8} {st.params_str:22} {st.n:6d} {st.r:6d} {st.T:7d} "
              f"{simp.log2_value:7.2f} {ex.log2_value:7.2f} {pub if pub else '':>6}  {diff}")
    if args.csv:
        Path(args.csv).write_text(table_report("all", args.eps))


if __name__ == "__main__":
    main()
