import argparse
import sys

import quasi_shuffle_signature.cli.cli_utils as cli_utils
import quasi_shuffle_signature.qsym.dimensions as dimensions


def main(argv=None, prog="qsig dims"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Print the number of words of each weight n = 0..MAX_N "
            "over d letters, cross-checked against explicit "
            "enumeration and the Hilbert series."
        )
    )
    parser.add_argument(
        "--d",
        type=int,
        required=True,
        help="Alphabet size (>= 1)."
    )
    parser.add_argument(
        "--max-n",
        type=int,
        required=True,
        help="Largest weight to tabulate (>= 0)."
    )
    parser.add_argument(
        "--enumerate-up-to",
        type=int,
        default=None,
        help=(
            "Only enumerate words explicitly for n up to this value "
            "(default: MAX_N)."
        )
    )
    args = parser.parse_args(argv)
    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    table = dimensions.dimension_table(
        d=args.d,
        max_n=args.max_n,
        enumerate_up_to=args.enumerate_up_to
    )
    print(format_dimension_table(table))
    if bool(table['agree'].all()):
        return cli_utils.EXIT_OK
    return cli_utils.EXIT_VIOLATION


def format_dimension_table(table):
    """
    Render the output of dimensions.dimension_table as two aligned
    rows (n and dim) plus a cross-check footer
    """
    n_values = [str(int(n)) for n in table['n']]
    dim_values = [str(int(dim)) for dim in table['dim']]
    widths = [max(len(a), len(b)) for a, b in zip(n_values, dim_values)]
    n_row = " ".join(v.rjust(w) for v, w in zip(n_values, widths))
    dim_row = " ".join(v.rjust(w) for v, w in zip(dim_values, widths))

    enumerated = table[table['enumerated'].notna()]
    if len(enumerated) > 0:
        enumerated_to = int(enumerated['n'].max())
        enumeration_note = f"enumeration checked for n <= {enumerated_to}"
    else:
        enumeration_note = "enumeration not checked"
    if bool(table['agree'].all()):
        verdict = "OK"
    else:
        bad = [str(int(n)) for n in table.loc[~table['agree'], 'n']]
        verdict = f"MISMATCH at n = {', '.join(bad)}"
    footer = (
        f"cross-check ({enumeration_note}; Hilbert series checked for "
        f"n <= {int(table['n'].max())}): {verdict}"
    )
    return "\n".join([f"n   {n_row}", f"dim {dim_row}", footer])


if __name__ == "__main__":
    sys.exit(main())
