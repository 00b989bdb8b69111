from pathlib import Path

from context import CommandContext
from hda.automaton import validate
from hda.determinism import is_deterministic
from hda.formats import load_hda, to_dot, to_hda_text
from hda.paths import ev_of_path
from hda.search import divide_path, enumerate_language, ess_closure, essential_report, member, sparse_accepting_paths
from ipomsets.formats import render
from tools.inputs import read_hda, read_ipomset
from tools.registry import arg, command


@command(
    "hda", "validate",
    "Check face typing and the precubical identities of an HDA.",
    (arg("file"),),
)
async def ValidateTool(ctx: CommandContext, args) -> int:
    """Check face typing and the precubical identities of an HDA."""
    report = validate(load_hda(args.file))
    if ctx.json_output:
        ctx.emit_json(report)
    else:
        ctx.emit(f"{'valid' if report.valid else 'invalid'}: {report.cells} cells")
        for problem in report.problems:
            ctx.emit(f"  {problem}")
    return 0 if report.valid else 1


@command(
    "hda", "lang",
    "Enumerate the event ipomsets of sparse accepting paths up to the step bound.",
    (arg("file"), arg("--paths", action="store_true", help="print the accepting paths too")),
)
async def LangTool(ctx: CommandContext, args) -> int:
    """Enumerate the event ipomsets of sparse accepting paths up to the step bound."""
    X = read_hda(args.file)
    if args.paths:
        rows = [(path.render(X), render(ev_of_path(X, path))) for path in sparse_accepting_paths(X, ctx.max_steps)]
        if ctx.json_output:
            ctx.emit_json([{"path": path, "ipomset": P} for path, P in rows])
        else:
            for path, P in rows:
                ctx.emit(f"{path}    {P}")
        return 0
    language = sorted(enumerate_language(X, ctx.max_steps))
    if ctx.json_output:
        ctx.emit_json([render(P) for P in language])
        return 0
    for P in language:
        ctx.emit(render(P))
    ctx.emit(f"# {len(language)} ipomsets within {ctx.max_steps} steps")
    return 0


@command(
    "hda", "member",
    "Decide whether an ipomset is accepted and print a witness path.",
    (
        arg("file"),
        arg("--expr", required=True, help="ipomset expression, inline block or .ipo file"),
        arg("--split", nargs=2, metavar=("LEFT", "RIGHT"), help="divide the witness path at LEFT*RIGHT"),
    ),
)
async def MemberTool(ctx: CommandContext, args) -> int:
    """Decide whether an ipomset is accepted and print a witness path."""
    X = read_hda(args.file)
    verdict = member(X, read_ipomset(args.expr))
    document = verdict.model_dump(mode="json") | {
        "path": verdict.path.render(X) if verdict.path else None
    }
    if verdict.accepted and args.split:
        pieces = divide_path(X, verdict.path, read_ipomset(args.split[0]), read_ipomset(args.split[1]))
        document["split"] = [piece.render(X) for piece in pieces] if pieces else None
    if ctx.json_output:
        ctx.emit_json(document)
    else:
        ctx.emit(f"{verdict.ipomset}: {'accepted' if verdict.accepted else 'rejected'}")
        if document["path"]:
            ctx.emit(f"  path: {document['path']}")
        if "split" in document:
            ctx.emit("  split: " + (" | ".join(document["split"]) if document["split"] else "none"))
    return 0 if verdict.accepted else 1


@command(
    "hda", "ess",
    "Print accessible, coaccessible and essential cells; -o writes the essential sub-HDA.",
    (arg("file"), arg("-o", "--output", help="write the essential sub-HDA here")),
)
async def EssentialTool(ctx: CommandContext, args) -> int:
    """Print accessible, coaccessible and essential cells; -o writes the essential sub-HDA."""
    X = read_hda(args.file)
    report = essential_report(X)
    if args.output:
        Path(args.output).write_text(to_hda_text(ess_closure(X)), encoding="utf-8")
    if ctx.json_output:
        ctx.emit_json(report.model_dump(mode="json"))
        return 0
    for name in ("accessible", "coaccessible", "essential", "closure"):
        ctx.emit(f"{name}: {', '.join(sorted(getattr(report, name)))}")
    return 0


@command(
    "hda", "det",
    "Check determinism; a violation prints the witness cells.",
    (arg("file"),),
)
async def DeterminismTool(ctx: CommandContext, args) -> int:
    """Check determinism; a violation prints the witness cells."""
    verdict = is_deterministic(read_hda(args.file))
    if ctx.json_output:
        ctx.emit_json(verdict.model_dump(mode="json") | {"description": verdict.describe()})
    else:
        ctx.emit(verdict.describe())
    return 0 if verdict.holds else 1


@command(
    "hda", "dot",
    "Emit Graphviz DOT for an HDA.",
    (arg("file"), arg("-o", "--output", help="write the DOT text here")),
)
async def DotTool(ctx: CommandContext, args) -> int:
    """Emit Graphviz DOT for an HDA."""
    text = to_dot(read_hda(args.file))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        ctx.emit(text.rstrip("\n"))
    return 0
