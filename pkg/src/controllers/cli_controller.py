"""
Command-line controller.
Parses a request, checks preconditions, dispatches to the services and renders
text or JSON with stable exit codes.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from app.schemas import (
    ElementSetResponse, FactorizationResponse, LeadingIdempotentResponse,
    RewriteResponse, VerificationResponse, WordResponse, ConjugateFactorResponse,
)
from config.settings import EXIT_INVALID, MESSAGES, STATUS_EXIT_CODES, Settings
from core.errors import InvalidInputError
from core.interfaces import MessageHandlerInterface
from core.transformation import Transformation
from services.factorization_service import FactorizationService
from services.oracle_service import CHECKS, OracleService
from shared.utils.constraint_validator import ConstraintValidator
from shared.utils.text_codec import parse_permutation, parse_transformation, parse_word

logger = logging.getLogger(__name__)


class StreamMessageHandler(MessageHandlerInterface):
    """Errors to stderr, results to stdout."""

    def handle_error(self, message: str) -> None:
        print(f"error: {message}", file=sys.stderr)

    def handle_info(self, message: str) -> None:
        print(message, file=sys.stderr)

    def handle_success(self, message: str) -> None:
        print(message)


@dataclass
class CommandRequest:
    """A parsed invocation: subcommand, n, positional text arguments and flags."""

    subcommand: str
    n: int
    arguments: Tuple[str, ...] = ()
    flags: Dict[str, Any] = field(default_factory=dict)

    def transformation(self, index: int = 0) -> Transformation:
        if index >= len(self.arguments) or self.arguments[index] is None:
            raise InvalidInputError(f"{self.subcommand} needs a transformation argument")
        return parse_transformation(self.arguments[index], self.n)

    def singular(self, index: int = 0) -> Transformation:
        t = self.transformation(index)
        ConstraintValidator.require_singular(t)
        return t

    def flag_transformation(self, name: str) -> Optional[Transformation]:
        text = self.flags.get(name)
        return parse_transformation(text, self.n) if text is not None else None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive_int, required=True, help="number of points")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-n", type=int, default=None, help="closure size guard (env EPIGEN_MAX_N)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="epigen",
        description="Idempotent and conjugate factorizations of singular transformations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor into idempotents of equal rank")
    p.add_argument("images")

    p = sub.add_parser("factor-conj", parents=[common], help="factor into e and conjugates of a base idempotent")
    p.add_argument("images")
    p.add_argument("--base", required=True)

    p = sub.add_parser("rewrite", parents=[common], help="trade a * (x y) for idempotents")
    p.add_argument("images")
    p.add_argument("--swap", nargs=2, type=int, required=True, metavar=("X", "Y"))
    p.add_argument("--base", default=None)

    p = sub.add_parser("conjugate", parents=[common], help="compute g^-1 t g")
    p.add_argument("images")
    p.add_argument("--by", required=True)

    p = sub.add_parser("theorem5", parents=[common], help="conjugates of a whose product is its idempotent part")
    p.add_argument("images")

    p = sub.add_parser("word-factor", parents=[common], help="rewrite a word as conjugates of its base")
    p.add_argument("images")
    p.add_argument("--word", required=True)

    p = sub.add_parser("find-word", parents=[common], help="search a word over a and S_n reaching a target")
    p.add_argument("images")
    p.add_argument("--base", required=True)

    p = sub.add_parser("verify", parents=[common], help="exhaustive or randomized checks")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("images", nargs="?")
    p.add_argument("--trials", type=_positive_int, default=10_000)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate idempotents, ideals or conjugacy classes")
    p.add_argument("kind", choices=("idempotents", "ideal", "class"))
    p.add_argument("images", nargs="?")
    p.add_argument("--rank", type=int, default=None)
    return parser


class CLIController:
    """Maps subcommands to services and renders their results."""

    def __init__(self, message_handler: Optional[MessageHandlerInterface] = None):
        self.message_handler = message_handler or StreamMessageHandler()
        self.handlers: Dict[str, Callable[[CommandRequest], Dict[str, Any]]] = {
            "factor": self._factor,
            "factor-conj": self._factor_conj,
            "rewrite": self._rewrite,
            "conjugate": self._conjugate,
            "theorem5": self._theorem5,
            "word-factor": self._word_factor,
            "find-word": self._find_word,
            "verify": self._verify,
            "enumerate": self._enumerate,
        }

    def run(self, argv: Sequence[str]) -> int:
        """
        Execute one command.

        Returns:
            Exit code: 0 ok, 1 refuted, 2 invalid input, 3 not a member, 4 self-check failure
        """
        try:
            args = build_parser().parse_args(list(argv))
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_INVALID

        try:
            self.config = Settings.load(max_n=args.max_n, random_seed=args.seed)
        except ValueError as exc:
            self.message_handler.handle_error(str(exc).splitlines()[0])
            return EXIT_INVALID
        logging.basicConfig(level=logging.DEBUG if args.verbose else self.config.log_level,
                            stream=sys.stderr, force=True)

        request = self._to_request(args)
        try:
            result = self.handlers[request.subcommand](request)
        except InvalidInputError as exc:
            self.message_handler.handle_error(str(exc))
            return EXIT_INVALID

        status = result.get("status", "ok")
        if status not in ("ok", "refuted"):
            self.message_handler.handle_error(result["message"])
            return STATUS_EXIT_CODES.get(status, EXIT_INVALID)
        self._render(request, result)
        return STATUS_EXIT_CODES[status]

    # ------------------------------------------------------------------ #
    # Request handling
    # ------------------------------------------------------------------ #
    @staticmethod
    def _to_request(args: argparse.Namespace) -> CommandRequest:
        flags = {key: value for key, value in vars(args).items()
                 if key not in ("subcommand", "n", "images")}
        return CommandRequest(args.subcommand, args.n, (getattr(args, "images", None),), flags)

    def _factor(self, request: CommandRequest) -> Dict[str, Any]:
        return self._factorization_service().factor(request.singular())

    def _factor_conj(self, request: CommandRequest) -> Dict[str, Any]:
        a = request.singular()
        base = request.flag_transformation("base")
        ConstraintValidator.require_same_rank(a, base)
        return self._factorization_service().factor_conjugates(a, base)

    def _rewrite(self, request: CommandRequest) -> Dict[str, Any]:
        x, y = request.flags["swap"]
        return self._factorization_service().rewrite(
            request.singular(), (x, y), request.flag_transformation("base"))

    def _conjugate(self, request: CommandRequest) -> Dict[str, Any]:
        g = parse_permutation(request.flags["by"], request.n)
        return self._factorization_service().conjugate(request.transformation(), g)

    def _theorem5(self, request: CommandRequest) -> Dict[str, Any]:
        return self._factorization_service().theorem5(request.singular())

    def _word_factor(self, request: CommandRequest) -> Dict[str, Any]:
        word = parse_word(request.flags["word"], request.singular())
        return self._factorization_service().word_factor(word)

    def _find_word(self, request: CommandRequest) -> Dict[str, Any]:
        target = request.singular()
        base = request.flag_transformation("base")
        return self._oracle_service().find_word(target, base)

    def _verify(self, request: CommandRequest) -> Dict[str, Any]:
        check = request.flags["check"]
        a = request.transformation() if request.arguments[0] is not None else None
        return self._oracle_service().verify(check, request.n, a, trials=request.flags["trials"])

    def _enumerate(self, request: CommandRequest) -> Dict[str, Any]:
        kind = request.flags["kind"]
        service = self._oracle_service()
        if kind == "class":
            return service.enumerate_class(request.transformation())
        rank = request.flags.get("rank")
        if rank is None:
            raise InvalidInputError(f"enumerate {kind} needs --rank")
        if kind == "ideal":
            return service.enumerate_ideal(request.n, rank)
        return service.enumerate_idempotents(request.n, rank)

    def _factorization_service(self) -> FactorizationService:
        return FactorizationService()

    def _oracle_service(self) -> OracleService:
        return OracleService(self.config)

    # ------------------------------------------------------------------ #
    # Rendering
    # ------------------------------------------------------------------ #
    def _render(self, request: CommandRequest, result: Dict[str, Any]) -> None:
        as_json = request.flags.get("json", False)
        model, lines = self._present(request, result)
        if as_json:
            print(model.model_dump_json(exclude_none=True))
            return
        for line in lines:
            print(line)

    def _present(self, request: CommandRequest, result: Dict[str, Any]):
        command = request.subcommand
        if command in ("factor", "factor-conj", "word-factor"):
            factorization = result["factorization"]
            model = FactorizationResponse.from_domain(factorization, result["verified"])
            lines = [f"input: {factorization.input} (n={factorization.n}, rank {factorization.rank})"]
            if factorization.base is not None:
                lines.append(f"base: {factorization.base}")
            lines.extend(self._factor_lines(model.factors))
            lines.append(MESSAGES["verified"])
            return model, lines
        if command == "rewrite":
            model = RewriteResponse.from_result(result)
            x, y = model.swap
            lines = [f"{model.input} * ({x} {y}) = {model.input} * product of {len(model.factors)} factor(s)"]
            lines.extend(self._factor_lines(model.factors))
            lines.append(MESSAGES["verified"])
            return model, lines
        if command == "conjugate":
            model = ConjugateFactorResponse.from_domain(result["factor"])
            return model, [model.value]
        if command == "theorem5":
            model = LeadingIdempotentResponse.from_result(result)
            lines = [f"  {f.value}  by {f.conjugator}" for f in model.factors]
            lines.append(f"product: {model.product} = e")
            return model, lines
        if command == "find-word":
            model = WordResponse.from_domain(result["word"])
            return model, [model.word]
        if command == "verify":
            model = VerificationResponse(check=result["check"], n=result["n"], verified=result["verified"])
            return model, [result["message"]]
        model = ElementSetResponse.from_domain(result["element_set"])
        return model, [f"size: {model.size}", *model.members]

    @staticmethod
    def _factor_lines(factors) -> List[str]:
        lines = []
        for factor in factors:
            suffix = f"  by {factor.conjugator}" if factor.conjugator is not None else ""
            lines.append(f"  {factor.images}  {factor.kind}{suffix}")
        return lines


def run(argv: Sequence[str]) -> int:
    return CLIController().run(argv)
