"""
Entry point dispatching `qsig <command> ...` to the command modules
"""
import argparse
import sys

import quasi_shuffle_signature.cli.area_calculator as area_calculator
import quasi_shuffle_signature.cli.check_properties as check_properties
import quasi_shuffle_signature.cli.compute_signature as compute_signature
import quasi_shuffle_signature.cli.dimension_table as dimension_table
import quasi_shuffle_signature.cli.hoffman_calculator as hoffman_calculator
import quasi_shuffle_signature.cli.qsh_calculator as qsh_calculator


COMMANDS = {
    'sig': (compute_signature,
            "iterated-sums signature of a CSV time series (JSON)"),
    'qsh': (qsh_calculator,
            "products, antipode and coproduct of words"),
    'hoffman': (hoffman_calculator,
                "Hoffman's exponential and logarithm of a word"),
    'dims': (dimension_table,
             "graded dimensions of the quasi-shuffle algebra"),
    'check': (check_properties,
              "check a signature property on a CSV time series"),
    'area': (area_calculator,
             "area operations and iterated area spaces")
}


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = argparse.ArgumentParser(
        prog="qsig",
        description=(
            "Quasi-shuffle algebra and iterated-sums signatures. "
            "Run 'qsig <command> --help' for the options of a command."
        ),
        epilog="\n".join(
            f"{name}: {help_text}"
            for name, (_, help_text) in COMMANDS.items()
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        "command",
        type=str,
        choices=sorted(COMMANDS)
    )
    parser.add_argument(
        "args",
        nargs=argparse.REMAINDER
    )
    args = parser.parse_args(argv)
    module = COMMANDS[args.command][0]
    return module.main(args.args, prog=f"qsig {args.command}")


if __name__ == "__main__":
    sys.exit(main())
