"""
Command line entry point: ``wmcount count``, ``wmcount gen`` and ``wmcount check``.

Exit codes: 0 on success, 1 on parse, usage, configuration, contract or I/O errors, 2 when a runtime structural
check fails (a failed check of ``check``, or any check under ``--paranoid``).
"""

import argparse
import json
import logging
import sys

from .config import SolverConfig
from .dimacs import GenSpec, generate_random, parse_dimacs
from .exceptions import InvariantViolation, WMCError
from .graphs import dual_graph, primal_graph, to_dot
from .pathdecomp import PathDecomposition, parse_bags, validate
from .reduce import reduce_fixpoint
from .solver import Algorithm, Solver
from .structure import check_reduced, format_report

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVARIANT = 2

_handler = None


def _configure_logging(verbose):
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    _handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    root.addHandler(_handler)
    if verbose:
        for name in list(logging.root.manager.loggerDict):
            if name.startswith("wmcount"):
                logging.getLogger(name).setLevel(logging.DEBUG)


def build_parser():
    parser = argparse.ArgumentParser(prog="wmcount", description="Exact weighted model counting for 2-CNF and 3-CNF.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    count = commands.add_parser("count", help="count the models of a DIMACS file")
    count.add_argument("file")
    count.add_argument("--algo", default=Algorithm.AUTO.value, choices=[a.value for a in Algorithm])
    count.add_argument("--alpha", type=float, help="weight of 2-clauses in the 3-CNF measure")
    count.add_argument("--stats-json", metavar="PATH", help="write search statistics to PATH")
    count.add_argument("--brute-cap", type=int, help="enumerate phase-three formulas with at most N variables")
    count.add_argument("--config", metavar="PATH", help="JSON solver configuration")
    count.add_argument("--paranoid", action="store_true", help="fail on any runtime structural check")
    count.add_argument("--mpi", action="store_true", help="distribute enumeration over MPI ranks")

    gen = commands.add_parser("gen", help="print a random DIMACS instance")
    gen.add_argument("--vars", type=int, required=True)
    gen.add_argument("--clauses", type=int, required=True)
    gen.add_argument("--width", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--max-weight", type=int, default=1)

    check = commands.add_parser("check", help="reduce a DIMACS file and report its structure")
    check.add_argument("file")
    check.add_argument("--decomposition", metavar="PATH", help="validate a path decomposition (one bag per line)")
    check.add_argument("--graph", choices=["primal", "dual"], default="primal",
                       help="graph the decomposition refers to; dual bags hold 1-based clause numbers")
    check.add_argument("--dot", metavar="PATH", help="write the reduced formula's primal graph in DOT format")
    check.add_argument("--config", metavar="PATH", help="JSON solver configuration")
    return parser


def _read(path):
    with open(path, "r") as read_file:
        return read_file.read()


def _write(path, text):
    with open(path, "w") as write_file:
        write_file.write(text)


def emit_result(count, stats, stats_path=None, weighted=False, stream=None):
    """
    Prints the count and writes the statistics.

    Parameters
    ----------
    count : int
    stats : SearchStats
    stats_path : string, optional
        Where the JSON statistics go; nothing is written if None.
    weighted : bool
        Whether the input carried non-unit weights.
    stream : file object, optional
        Defaults to standard output.
    """
    stream = stream if stream is not None else sys.stdout
    print(count, file=stream)
    if stats_path is not None:
        document = stats.to_dict()
        document["count"] = count
        document["weighted"] = weighted
        _write(stats_path, json.dumps(document, indent=2) + "\n")


def _mpi_comm():
    try:
        from mpi4py import MPI
    except ImportError:
        logger.warning("mpi4py is not installed; counting on a single process")
        return None
    return MPI.COMM_WORLD


def _count(args):
    parsed = parse_dimacs(_read(args.file))
    config = SolverConfig(args.config, alpha=args.alpha, brute_cap=args.brute_cap,
                          paranoid=True if args.paranoid else None)
    comm = _mpi_comm() if args.mpi else None
    solver = Solver(config, comm=comm)
    result = solver.count(parsed.instance, Algorithm(args.algo))
    if comm is None or comm.Get_rank() == 0:
        solver.stats.print_stats()
        emit_result(result, solver.stats, args.stats_json, parsed.is_weighted())
    return EXIT_OK


def _gen(args):
    spec = GenSpec(args.vars, args.clauses, args.width, args.max_weight, args.seed)
    sys.stdout.write(generate_random(spec))
    return EXIT_OK


def _check(args):
    parsed = parse_dimacs(_read(args.file))
    config = SolverConfig(args.config)
    formula = parsed.instance.formula
    exit_code = EXIT_OK

    if args.decomposition is not None:
        decomposition = parse_bags(_read(args.decomposition))
        if args.graph == "dual":
            graph = dual_graph(formula)
            decomposition = PathDecomposition([{c - 1 for c in bag} for bag in decomposition.bags])
        else:
            graph = primal_graph(formula)
        report = validate(decomposition, graph)
        if report:
            print("decomposition valid, width {}".format(decomposition.width()))
        else:
            print("decomposition {}".format(report))
            exit_code = EXIT_ERROR

    reduced = reduce_fixpoint(parsed.instance, config.get_small_part_limit()).formula
    checks = check_reduced(reduced, config.get_small_part_limit())
    sys.stdout.write(format_report(reduced, checks))
    if args.dot is not None:
        _write(args.dot, to_dot(primal_graph(reduced), name="primal"))
    if exit_code == EXIT_OK and not all(check.ok for check in checks):
        exit_code = EXIT_INVARIANT
    return exit_code


_COMMANDS = {"count": _count, "gen": _gen, "check": _check}


def main(argv=None):
    """
    Runs the command line.

    Parameters
    ----------
    argv : list of string, optional
        Arguments without the program name; defaults to sys.argv[1:].

    Returns
    -------
    exit_code : int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code == 0 else EXIT_ERROR
    _configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except InvariantViolation as error:
        logger.error("Invariant violation: {}".format(error))
        return EXIT_INVARIANT
    except WMCError as error:
        logger.error(str(error))
        return EXIT_ERROR
    except OSError as error:
        logger.error(str(error))
        return EXIT_ERROR


cli_main = main


def run():
    sys.exit(main())
