"""Command-line front end.

JSON output is the stable machine format; text output is meant for people
and may change. Exit codes: 0 ok or verified, 1 negative verdict or failed
precondition, 2 inconclusive, 3 refuted, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .abacus import BlockId, block_of, from_partition, p_core, p_quotient, p_weight, residue_content
from .classify import block_verdicts, irreducible_specht, verify_main_theorem
from .errors import (
    ConfigurationError,
    DomainError,
    InconclusiveError,
    ModulusError,
    PartitionError,
    SignedYoungError,
)
from .ladders import regularize
from .partitions import Partition, check_prime, conjugate, is_p_regular, is_p_restricted, mullineux
from .specht import specht_module

EXIT_OK, EXIT_NEGATIVE, EXIT_INCONCLUSIVE, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2, 3, 64


@dataclass(frozen=True)
class RunConfig:
    p: int = 3
    beads: int | None = None
    seed: int = 0
    max_dim: int = 1500
    format: str = "text"
    min_p: int = 3

    def __post_init__(self):
        check_prime(self.p, self.min_p)
        if self.max_dim < 1:
            raise ConfigurationError(f"--max-dim must be at least 1, got {self.max_dim}")
        if self.beads is not None and self.beads < 0:
            raise ConfigurationError("--beads must be non-negative")
        if self.format not in ("text", "json"):
            raise ConfigurationError(f"unknown format {self.format!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="the prime (default 3)")
    common.add_argument("--beads", type=int, default=None, help="abacus bead count override")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-dim", type=int, default=1500, help="dimension budget for module computations")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--dump-rep", metavar="PATH", default=None, help="write the Specht generators as JSON")

    parser = _Parser(prog="signed-young", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    info = sub.add_parser("info", parents=[common], help="combinatorial data of a partition")
    info.add_argument("partition", type=_partition_arg)
    blk = sub.add_parser("classify-block", parents=[common], help="irreducibility across a Rouquier block")
    blk.add_argument("--core", type=_partition_arg, required=True)
    blk.add_argument("--weight", type=int, required=True)
    ver = sub.add_parser("verify", parents=[common], help="find a signed permutation module containing S^lambda")
    ver.add_argument("partition", type=_partition_arg)
    irr = sub.add_parser("irreducible", parents=[common], help="decide irreducibility of S^lambda")
    irr.add_argument("partition", type=_partition_arg)
    irr.add_argument("--method", default=None)
    reg = sub.add_parser("regularize", parents=[common], help="ladder regularization")
    reg.add_argument("partition", type=_partition_arg)
    aba = sub.add_parser("abacus", parents=[common], help="abacus display")
    aba.add_argument("partition", type=_partition_arg)
    mul = sub.add_parser("mullineux", parents=[common], help="Mullineux image of a p-regular partition")
    mul.add_argument("partition", type=_partition_arg)
    return parser


def _emit(cfg: RunConfig, payload, text: str, out) -> None:
    if cfg.format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _dump(path: str | None, lam: Partition, cfg: RunConfig) -> None:
    if path is None:
        return
    rep = specht_module(lam, cfg.p)
    if rep.dim > cfg.max_dim:
        raise InconclusiveError(f"dim S^{lam} = {rep.dim} exceeds --max-dim {cfg.max_dim}")
    with open(path, "w", encoding="utf-8") as fh:
        for i, g in enumerate(rep.gens, start=1):
            fh.write(json.dumps({"generator": i, "p": cfg.p, "dim": rep.dim, "rows": g.tolist()}) + "\n")


def _info(lam: Partition, cfg: RunConfig) -> dict:
    p = cfg.p
    return {
        "partition": str(lam),
        "size": lam.size,
        "p": p,
        "conjugate": str(conjugate(lam)),
        "regular": is_p_regular(lam, p),
        "restricted": is_p_restricted(lam, p),
        "core": str(p_core(lam, p)),
        "weight": p_weight(lam, p),
        "quotient": [str(q) for q in p_quotient(lam, p)],
        "regularization": str(regularize(lam, p)),
        "residue_content": list(residue_content(lam, p)),
    }


def run(argv, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        pure = args.command in ("info", "regularize", "abacus", "mullineux")
        cfg = RunConfig(args.p, args.beads, args.seed, args.max_dim, args.format, 2 if pure else 3)
    except (ModulusError, ConfigurationError) as exc:
        sys.stderr.write(f"signed-young: error: {exc}\n")
        return EXIT_USAGE
    try:
        return _dispatch(args, cfg, out)
    except (PartitionError, ModulusError, ConfigurationError) as exc:
        sys.stderr.write(f"signed-young: error: {exc}\n")
        return EXIT_USAGE
    except InconclusiveError as exc:
        sys.stderr.write(f"signed-young: inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    except SignedYoungError as exc:
        sys.stderr.write(f"signed-young: {exc}\n")
        return EXIT_NEGATIVE


def _dispatch(args, cfg: RunConfig, out) -> int:
    cmd = args.command
    if cmd == "info":
        rec = _info(args.partition, cfg)
        text = "\n".join(f"{k}: {v}" for k, v in rec.items())
        _emit(cfg, rec, text, out)
        _dump(args.dump_rep, args.partition, cfg)
        return EXIT_OK
    if cmd == "regularize":
        reg = regularize(args.partition, cfg.p)
        _emit(cfg, {"partition": str(args.partition), "p": cfg.p, "regularization": str(reg)}, str(reg), out)
        return EXIT_OK
    if cmd == "abacus":
        a = from_partition(args.partition, cfg.p, cfg.beads)
        _emit(cfg, a.to_json(), a.render(), out)
        return EXIT_OK
    if cmd == "mullineux":
        m = mullineux(args.partition, cfg.p)
        _emit(cfg, {"partition": str(args.partition), "p": cfg.p, "mullineux": str(m)}, str(m), out)
        return EXIT_OK
    if cmd == "classify-block":
        block = BlockId(cfg.p, args.core, args.weight)
        rows = block_verdicts(block)
        text = "\n".join(f"{str(v.partition):<24} {'irreducible' if v.irreducible else 'reducible'}" for v in rows)
        _emit(cfg, [v.to_json() for v in rows], text, out)
        return EXIT_OK
    if cmd == "irreducible":
        v = irreducible_specht(args.partition, cfg.p, cfg.max_dim, cfg.seed, args.method)
        text = f"{v.partition}: {'irreducible' if v.irreducible else 'reducible'} ({v.method})"
        _emit(cfg, v.to_json(), text, out)
        _dump(args.dump_rep, args.partition, cfg)
        return EXIT_OK if v.irreducible else EXIT_NEGATIVE
    if cmd == "verify":
        return _verify(args, cfg, out)
    raise AssertionError(cmd)  # argparse restricts the choices


def _verify(args, cfg: RunConfig, out) -> int:
    lam = args.partition
    try:
        report = verify_main_theorem(lam, cfg.p, cfg.max_dim, cfg.seed)
    except DomainError:
        v = irreducible_specht(lam, cfg.p, cfg.max_dim, cfg.seed)
        _emit(cfg, {**v.to_json(), "status": "reducible"}, f"{lam}: reducible ({v.method})", out)
        return EXIT_NEGATIVE
    data = report.to_json()
    lines = [f"{lam} over GF({cfg.p}): {data['status']} ({data['method']})"]
    if data["certificate"]:
        c = data["certificate"]
        lines.append(f"summand of M({c['alpha']} | {c['p_beta']})")
    if report.label.known:
        alpha, beta = report.label.shape(cfg.p)
        lines.append(f"predicted label: Y({alpha} | {beta})")
    else:
        lines.append("predicted label: unknown (mixed case)")
    _emit(cfg, data, "\n".join(lines), out)
    _dump(args.dump_rep, lam, cfg)
    return {"verified": EXIT_OK, "inconclusive": EXIT_INCONCLUSIVE, "refuted": EXIT_REFUTED}[report.status]


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
