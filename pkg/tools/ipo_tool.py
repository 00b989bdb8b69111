from context import CommandContext
from ipomsets.formats import render, to_block, to_document
from ipomsets.intervals import interval_representation
from ipomsets.steps import glue, sparse_decomposition
from ipomsets.subsumption import down_close, subsumption_verdict
from tools.inputs import read_ipomset, read_ipomsets
from tools.registry import arg, command


@command(
    "ipo", "canon",
    "Print the canonical block of each ipomset in the given files or expressions.",
    (arg("inputs", nargs="+", help=".ipo file, expression or inline block"),),
)
async def CanonTool(ctx: CommandContext, args) -> int:
    """Print the canonical block of each ipomset in the given files or expressions."""
    found = [item for given in args.inputs for item in read_ipomsets(given)]
    if ctx.json_output:
        ctx.emit_json([to_document(P).model_dump() | {"name": name} for name, P in found])
        return 0
    for name, P in found:
        ctx.emit(to_block(P, name))
    return 0


@command(
    "ipo", "glue",
    "Glue two ipomsets along the target interface of the first and the source interface of the second.",
    (arg("left"), arg("right")),
)
async def GlueTool(ctx: CommandContext, args) -> int:
    """Glue two ipomsets along the target interface of the first and the source interface of the second."""
    P = glue(read_ipomset(args.left), read_ipomset(args.right))
    if ctx.json_output:
        ctx.emit_json(to_document(P))
    else:
        ctx.emit(render(P))
    return 0


@command(
    "ipo", "subsume",
    "Decide whether the first ipomset is subsumed by the second and print the bijection.",
    (arg("left"), arg("right")),
)
async def SubsumeTool(ctx: CommandContext, args) -> int:
    """Decide whether the first ipomset is subsumed by the second and print the bijection."""
    verdict = subsumption_verdict(read_ipomset(args.left), read_ipomset(args.right))
    if ctx.json_output:
        ctx.emit_json(verdict)
    elif verdict.holds:
        ctx.emit(f"{verdict.left} ⊑ {verdict.right}")
        ctx.emit("  " + ", ".join(f"{x}->{y}" for x, y in verdict.mapping.items()))
    else:
        ctx.emit(f"{verdict.left} ⋢ {verdict.right}")
    return 0 if verdict.holds else 1


@command(
    "ipo", "decompose",
    "Print the sparse step decomposition of an ipomset.",
    (arg("input"),),
)
async def DecomposeTool(ctx: CommandContext, args) -> int:
    """Print the sparse step decomposition of an ipomset."""
    sequence = sparse_decomposition(read_ipomset(args.input))
    if ctx.json_output:
        ctx.emit_json(
            {
                "initial_loset": list(sequence.initial_loset),
                "steps": [str(step) for step in sequence.steps],
            }
        )
        return 0
    if not sequence.steps:
        ctx.emit(str(sequence))
    for step in sequence.steps:
        ctx.emit(str(step))
    return 0


@command(
    "ipo", "refine",
    "Print the downward subsumption closure of the given ipomsets.",
    (arg("inputs", nargs="+"),),
)
async def RefineTool(ctx: CommandContext, args) -> int:
    """Print the downward subsumption closure of the given ipomsets."""
    closed = sorted(down_close(P for given in args.inputs for _, P in read_ipomsets(given)))
    if ctx.json_output:
        ctx.emit_json([render(P) for P in closed])
        return 0
    for P in closed:
        ctx.emit(render(P))
    ctx.emit(f"# {len(closed)} ipomsets")
    return 0


@command(
    "ipo", "json",
    "Print the JSON document of an ipomset.",
    (arg("input"),),
)
async def JsonTool(ctx: CommandContext, args) -> int:
    """Print the JSON document of an ipomset."""
    ctx.emit_json(to_document(read_ipomset(args.input)))
    return 0


@command(
    "ipo", "intervals",
    "Print an interval representation of an ipomset.",
    (arg("input"),),
)
async def IntervalsTool(ctx: CommandContext, args) -> int:
    """Print an interval representation of an ipomset."""
    rep = interval_representation(read_ipomset(args.input))
    if ctx.json_output:
        ctx.emit_json(rep)
        return 0
    ctx.emit("label,begin,end,open_left,open_right,rank")
    for e in rep.events:
        ctx.emit(f"{e.label},{e.begin},{e.end},{str(e.open_left).lower()},{str(e.open_right).lower()},{e.rank}")
    return 0
