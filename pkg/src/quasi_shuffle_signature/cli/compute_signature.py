import argparse
import sys
import time

import quasi_shuffle_signature.cli.cli_utils as cli_utils
import quasi_shuffle_signature.io.csv_utils as csv_utils
import quasi_shuffle_signature.io.json_utils as json_utils
import quasi_shuffle_signature.signature.parallel as parallel


def main(argv=None, prog="qsig sig"):
    parser = argparse.ArgumentParser(
        prog=prog,
        description=(
            "Compute the truncated iterated-sums signature of the "
            "time series in a CSV file (one row per time point, the "
            "first row is the base point x_0) and emit it as JSON."
        )
    )
    parser.add_argument(
        "input",
        type=str,
        help="Path to the CSV file."
    )
    cli_utils.add_max_weight_argument(parser)
    parser.add_argument(
        "--from",
        dest="n",
        type=int,
        default=0,
        help="Start n of the window (n, m] (default 0)."
    )
    parser.add_argument(
        "--to",
        dest="m",
        type=int,
        default=None,
        help="End m of the window (n, m] (default: last time index)."
    )
    parser.add_argument(
        "--exact",
        default=False,
        action="store_true",
        help=(
            "Read cells as exact rationals (integers or p/q) and "
            "compute exactly. Default is float arithmetic."
        )
    )
    parser.add_argument(
        "--words",
        type=str,
        nargs="+",
        default=None,
        help=(
            "Only write these words (in the word grammar, e.g. "
            "'[1][1,2]'). e is always written."
        )
    )
    parser.add_argument(
        "--chunks",
        type=int,
        default=1,
        help=(
            "Split the time axis into this many chunks and merge "
            "their signatures with Chen's rule (default 1)."
        )
    )
    parser.add_argument(
        "--n-processors",
        type=int,
        default=1,
        help="Number of worker processes computing chunks (default 1)."
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Write the JSON document here instead of stdout."
    )
    parser.add_argument(
        "--clobber",
        default=False,
        action="store_true",
        help="Whether or not to overwrite an existing --output file."
    )
    parser.add_argument(
        "--verbose",
        default=False,
        action="store_true",
        help="Log progress to stderr."
    )
    args = parser.parse_args(argv)

    return cli_utils.run_and_report(prog, _run, args)


def _run(args):
    return compute_signature(
        input_path=args.input,
        max_weight=cli_utils.resolve_max_weight(args.max_weight),
        n=args.n,
        m=args.m,
        exact=args.exact,
        words=args.words,
        chunks=args.chunks,
        n_processors=args.n_processors,
        output_path=args.output,
        clobber=args.clobber,
        log=cli_utils.get_log(args.verbose)
    )


def compute_signature(
        input_path,
        max_weight,
        n=0,
        m=None,
        exact=False,
        words=None,
        chunks=1,
        n_processors=1,
        output_path=None,
        clobber=False,
        log=None):
    """
    Read a CSV time series, compute DS(x)_{n,m} and write its JSON
    document to output_path (or stdout if output_path is None)

    Returns
    -------
    exit status (0)
    """
    t0 = time.time()
    x = csv_utils.read_time_series_csv(input_path, exact=exact)
    if log is not None:
        log.info(
            f"read {x.n_steps+1 if x.base is not None else 0} points "
            f"of dimension {x.d} from {input_path}"
        )

    sig = parallel.parallel_signature(
        x,
        max_weight=max_weight,
        chunks=chunks,
        n_processors=n_processors,
        log=log,
        n=n,
        m=m
    )

    if output_path is None:
        print(json_utils.signature_to_json_str(sig, words=words))
    else:
        json_utils.write_signature_json(
            sig, output_path, words=words, clobber=clobber)
        if log is not None:
            log.info(f"wrote {output_path}")

    if log is not None:
        log.info(f"signature computed in {time.time()-t0:.2e} seconds")
    return cli_utils.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
