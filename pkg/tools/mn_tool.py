from collections import Counter
from pathlib import Path

from context import CommandContext
from hda.formats import to_dot, to_hda_text
from mn.construction import build_mn
from mn.table import class_table
from mn.verify import determinism_agreement, verify_mn
from tools.inputs import read_language
from tools.registry import arg, command


@command(
    "mn", "build",
    "Build the Myhill-Nerode automaton of a finite language.",
    (
        arg("file"),
        arg("-o", "--output", help="write the automaton (.hda) here instead of stdout"),
        arg("--classes", help="write the class table (JSON) here"),
        arg("--dot", help="write Graphviz DOT here"),
    ),
)
async def BuildTool(ctx: CommandContext, args) -> int:
    """Build the Myhill-Nerode automaton of a finite language."""
    M = build_mn(read_language(ctx, args.file))
    text = to_hda_text(M.hda)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    if args.classes:
        Path(args.classes).write_text(class_table(M).model_dump_json(indent=2), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(to_dot(M.hda, M.captions()), encoding="utf-8")

    if ctx.json_output:
        ctx.emit_json(class_table(M))
        return 0
    if not args.output:
        ctx.emit(text.rstrip("\n"))
    dims = Counter(len(cell.loset) for cell in M.essential_cells())
    ctx.emit(
        f"# {len(M.cells)} cells; essential: "
        + (", ".join(f"{n} of dimension {d}" for d, n in sorted(dims.items())) or "none")
    )
    return 0


@command(
    "mn", "verify",
    "Build the automaton, check Lang(MN(L)) = L and compare swap-invariance with determinism.",
    (arg("file"),),
)
async def VerifyTool(ctx: CommandContext, args) -> int:
    """Build the automaton, check Lang(MN(L)) = L and compare swap-invariance with determinism."""
    L = read_language(ctx, args.file)
    M = build_mn(L)
    report = verify_mn(L, M)
    agreement = determinism_agreement(L, M)
    passed = report.passed and agreement.agrees
    if ctx.json_output:
        ctx.emit_json(
            report.model_dump()
            | {"passed": report.passed}
            | {"swap_invariant": agreement.swap_invariant, "deterministic": agreement.deterministic}
        )
        return 0 if passed else 1
    ctx.emit(f"language: {'ok' if report.language_ok else 'MISMATCH'} (bound {report.bound})")
    for P in report.missing:
        ctx.emit(f"  missing {P}")
    for P in report.extra:
        ctx.emit(f"  extra {P}")
    ctx.emit(f"essential cells: {'ok' if report.essential_ok else 'MISMATCH ' + ', '.join(report.essential_mismatch)}")
    ctx.emit(f"valid: {'ok' if report.valid else 'NO'}")
    for problem in report.problems:
        ctx.emit(f"  {problem}")
    ctx.emit(
        f"swap-invariant: {str(agreement.swap_invariant).lower()}, "
        f"deterministic: {str(agreement.deterministic).lower()}"
    )
    return 0 if passed else 1
