import argparse
import contextlib
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from .config import Settings, initialize_config
from .core.graph import AnyGraph, DeBruijnGraph, VertexWeights
from .formats import key_value_block
from .tools import BalanceTools, CycleTools, GameTools, GeneralTools, GraphTools, ToolResponse
from .utils.cache import GraphCache
from .utils.constants import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, exit_code_for
from .utils.exceptions import DeBruijnBalanceError, DomainError

logger = logging.getLogger(__name__)

COMMANDS = ("build", "solve", "balance", "verify", "general", "report")

Outcome = Tuple[str, int]


class CommandError(Exception):
    """A command could not run; carries the exit code."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and rename it into place."""
    target = Path(path)
    fd, temporary = tempfile.mkstemp(dir=str(target.parent), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(temporary, target)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            os.unlink(temporary)
        raise


class Runner:
    """One CLI invocation: resolves inputs and delegates every command to the tool classes."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.graphs = GraphTools(settings, GraphCache(settings))
        self.game = GameTools()
        self.balancing = BalanceTools(settings)
        self.cycles = CycleTools(settings)
        self.general = GeneralTools()

    def run(self) -> Outcome:
        commands: Dict[str, Callable[[], Outcome]] = {
            "build": self.build,
            "solve": self.solve,
            "balance": self.balance,
            "verify": self.verify,
            "general": self.general_table,
            "report": self.report,
        }
        return commands[self.args.command]()

    def _require(self, *names: str) -> None:
        missing = [f"--{name}" for name in names if getattr(self.args, name) is None]
        if missing:
            raise CommandError(f"{self.args.command} needs {', '.join(missing)}", EXIT_USAGE)

    @staticmethod
    def _unwrap(response: ToolResponse, *keys: str) -> ToolResponse:
        """Pass ``response`` on when it succeeded or still carries ``keys``; raise otherwise."""
        if response["success"] or (keys and all(key in response for key in keys)):
            return response
        raise CommandError(response["error"], response.get("exit_code", EXIT_USAGE))

    @staticmethod
    def _read(path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise CommandError(f"cannot read {path}: {e.strerror or e}", EXIT_USAGE)

    def _debruijn(self) -> DeBruijnGraph:
        self._require("n", "d")
        return self._unwrap(self.graphs.build_graph(self.args.n, self.args.d))["graph"]

    def _graph(self) -> Tuple[AnyGraph, Optional[DeBruijnGraph]]:
        """The --graph edge list when given, otherwise B(--n, --d)."""
        if self.args.graph is not None:
            loaded = self._unwrap(self.graphs.load_graph(self._read(self.args.graph)))
            return loaded["graph"], loaded["debruijn"]
        g = self._debruijn()
        return g, g

    def _vertex_weights(self, vertex_count: int) -> VertexWeights:
        self._require("weights")
        text = self._read(self.args.weights)
        return self._unwrap(self.graphs.load_vertex_weights(text, vertex_count))["weights"]

    def _turns(self) -> Optional[List[int]]:
        if self.args.mixed is None:
            return None
        tokens = [token.strip() for token in self.args.mixed.split(",") if token.strip()]
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise CommandError(f"--mixed takes comma-separated turns, got {self.args.mixed!r}", EXIT_USAGE)

    def build(self) -> Outcome:
        self._require("n", "d")
        return self._unwrap(self.graphs.build_graph(self.args.n, self.args.d))["text"], EXIT_OK

    def solve(self) -> Outcome:
        self._require("T")
        g = self._debruijn()
        c = self._vertex_weights(g.N)
        response = self._unwrap(
            self.game.solve(g, c, self.args.T, self._turns(), self.args.maxmin, self.args.decimal), "text"
        )
        return response["text"], response.get("exit_code", EXIT_OK)

    def balance(self) -> Outcome:
        g = self._debruijn()
        c = self._vertex_weights(g.N)
        response = self._unwrap(self.balancing.balance(g, c, self.args.decimal))
        report = key_value_block(response["report_lines"])
        if self.args.out is None:
            return response["weights_text"] + report, EXIT_OK
        # --out receives only the edge weights, ready for verify.
        write_atomic(self.args.out, response["weights_text"])
        return report, EXIT_OK

    def verify(self) -> Outcome:
        self._require("edges")
        graph, debruijn = self._graph()
        c = self._vertex_weights(graph.vertex_count)
        f = self._unwrap(self.graphs.load_edge_weights(self._read(self.args.edges), graph))["weights"]
        response = self._unwrap(self.cycles.verify(graph, c, f, debruijn, self.args.decimal), "lines")
        return key_value_block(response["lines"]), response["exit_code"]

    def general_table(self) -> Outcome:
        self._require("T")
        graph, _ = self._graph()
        c = self._vertex_weights(graph.vertex_count)
        response = self._unwrap(self.general.value_table(graph, c, self.args.T, self.args.decimal), "text")
        return response["text"], response.get("exit_code", EXIT_OK)

    def report(self) -> Outcome:
        """Run every check on one (n, d, c) and print a combined key-value block."""
        g = self._debruijn()
        c = self._vertex_weights(g.N)
        T = self.args.T if self.args.T is not None else 2 * g.d + 3
        decimal = self.args.decimal
        checks: List[bool] = []

        balanced = self._unwrap(self.balancing.balance(g, c, decimal))
        summary = balanced["report"]
        lines = list(balanced["report_lines"])
        checks += [summary.sum_zero, summary.stationary is not False]
        checks.append(summary.poisson_residual_max is None or summary.poisson_residual_max == 0)
        if summary.system is not None:
            checks += [summary.system.satisfied is not False, summary.system.unique is not False]

        lines.append(f"T {T}")

        def check(label: str, ok: bool) -> None:
            lines.append(f"{label} {'true' if ok else 'false'}")
            checks.append(ok)

        check("value_closed_form_equal", self._unwrap(self.game.closed_form_check(g, c, T))["equal"])
        solved = self._unwrap(self.game.solve(g, c, T, mixed=range(0, T, 2), maxmin=True), "table", "checks")
        lines += solved["checks"]
        checks.append(solved["success"])
        general = self._unwrap(self.general.value_table(g, c, T), "table")
        check("general_equals_value", general["table"] == solved["table"].values)
        check("k_regular_cross_check", bool(general["k_regular_cross_check"]))

        verified = self._unwrap(self.cycles.verify(g, c, balanced["weights"], None, decimal), "lines")
        lines += [line for line in verified["lines"] if not line.startswith("verdict")]
        checks.append(verified["verified"])

        ok = all(checks)
        lines.append(f"verdict {'verified' if ok else 'failed'}")
        if verified["exit_code"] == EXIT_CAPACITY:
            return key_value_block(lines), EXIT_CAPACITY
        return key_value_block(lines), EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbb",
        description="Solve the edge-weighting game on deBruijn graphs and verify the balanced cycle means",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to run")
    parser.add_argument("--n", type=int, help="Symbol count of B(n, d)")
    parser.add_argument("--d", type=int, help="Word length of B(n, d)")
    parser.add_argument("--T", type=int, help="Game horizon")
    parser.add_argument("--weights", help="Vertex-weight file")
    parser.add_argument("--graph", help="Edge-list file (verify, general)")
    parser.add_argument("--edges", help="Edge-weight file (verify)")
    parser.add_argument("--mixed", help="Comma-separated turns at which Paul sets the weights (solve)")
    parser.add_argument("--maxmin", action="store_true", help="Also solve the swapped game (solve)")
    parser.add_argument("--out", help="Write the result to this file instead of stdout")
    parser.add_argument("--decimal", type=int, help="Print values rounded to K digits")
    parser.add_argument("--cycle-cap", type=int, help="Maximum number of simple cycles to enumerate")
    parser.add_argument("--verbose", action="store_true", help="Log solver progress to stderr")
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the dbb command."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        if args.decimal is not None and args.decimal < 0:
            raise DomainError(f"--decimal must be non-negative, got {args.decimal}")
        settings = initialize_config().with_cycle_cap(args.cycle_cap)
        text, code = Runner(args, settings).run()
    except CommandError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except DeBruijnBalanceError as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)

    if args.out is not None and args.command != "balance":
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    logger.debug("%s finished with exit code %d", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
