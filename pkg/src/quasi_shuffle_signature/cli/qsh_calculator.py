import argparse
import sys

import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.cli.cli_utils as cli_utils
import quasi_shuffle_signature.hopf.coproduct as coproduct
import quasi_shuffle_signature.hopf.products as products


def main(argv=None, prog="qsig qsh"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Quasi-shuffle algebra calculator. Words are written as "
            "sequences of brackets, e.g. '[1][2,3]'; 'e' is the empty "
            "word. Results are printed with exact coefficients in "
            "canonical word order."
        )
    )
    parser.add_argument(
        "--d",
        type=int,
        default=None,
        help="Alphabet size; letters above it are rejected."
    )
    subparsers = parser.add_subparsers(dest="operation", required=True)

    for name, help_text in (
            ("prod", "quasi-shuffle product U * V"),
            ("shuffle", "shuffle product of U and V"),
            ("concat", "concatenation UV")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("u", type=str)
        sub.add_argument("v", type=str)

    for name, help_text in (
            ("half-qsh",
             "quasi-shuffle half-shuffle of KIND right, left or diamond"),
            ("half-sh", "shuffle half-shuffle of KIND right or left")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("kind", type=str)
        sub.add_argument("u", type=str)
        sub.add_argument("v", type=str)

    for name, help_text in (
            ("antipode", "antipode of W"),
            ("coproduct", "deconcatenation coproduct of W")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("w", type=str)

    args = parser.parse_args(argv)
    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    print(qsh_calculation(args, d=args.d))
    return cli_utils.EXIT_OK


def qsh_calculation(args, d=None):
    """
    Evaluate the operation described by the parsed arguments and
    return the printed result
    """
    operation = args.operation
    if operation in ("antipode", "coproduct"):
        w = word_parser.parse_word(args.w, d=d)
        if operation == "antipode":
            return str(coproduct.antipode(w, d=d))
        return str(coproduct.coproduct(w, d=d))

    u = word_parser.parse_word(args.u, d=d)
    v = word_parser.parse_word(args.v, d=d)
    if operation == "prod":
        result = products.quasi_shuffle(u, v, d=d)
    elif operation == "shuffle":
        result = products.shuffle(u, v, d=d)
    elif operation == "concat":
        result = products.concatenate(u, v, d=d)
    elif operation == "half-qsh":
        result = products.half_shuffle_qsh(args.kind, u, v, d=d)
    else:
        result = products.half_shuffle_sh(args.kind, u, v, d=d)
    return str(result)


if __name__ == "__main__":
    sys.exit(main())
