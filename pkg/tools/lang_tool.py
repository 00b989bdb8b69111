from context import CommandContext
from errors import HdaLangError
from ipomsets.formats import render
from languages.language import render_set
from languages.quotients import (
    QuotientFamily,
    is_swap_invariant,
    prefix_quotient,
    prefix_quotient_family,
    strong_equiv,
    suffix_quotient,
    suffix_quotient_family,
    weak_equiv,
)
from tools.inputs import read_ipomset, read_language
from tools.registry import arg, command


@command(
    "lang", "quotient",
    "Print the prefix quotient P\\L or the suffix quotient L/P.",
    (
        arg("file"),
        arg("--prefix", help="P for P\\L"),
        arg("--suffix", help="P for L/P"),
    ),
)
async def QuotientTool(ctx: CommandContext, args) -> int:
    """Print the prefix quotient P\\L or the suffix quotient L/P."""
    L = read_language(ctx, args.file)
    if (args.prefix is None) == (args.suffix is None):
        raise HdaLangError("give exactly one of --prefix and --suffix")
    if args.prefix is not None:
        quotient = prefix_quotient(L, read_ipomset(args.prefix))
    else:
        quotient = suffix_quotient(L, read_ipomset(args.suffix))
    if ctx.json_output:
        ctx.emit_json([render(Q) for Q in sorted(quotient)])
    else:
        ctx.emit(render_set(quotient))
    return 0


@command(
    "lang", "swapinv",
    "Decide swap-invariance; violations are printed as P ⊑ Q with differing quotients.",
    (arg("file"),),
)
async def SwapInvarianceTool(ctx: CommandContext, args) -> int:
    """Decide swap-invariance; violations are printed as P ⊑ Q with differing quotients."""
    verdict = is_swap_invariant(read_language(ctx, args.file))
    if ctx.json_output:
        ctx.emit_json(
            {
                "holds": verdict.holds,
                "witnesses": [
                    {
                        "smaller": str(w.smaller),
                        "larger": str(w.larger),
                        "smaller_quotient": [str(Q) for Q in w.smaller_quotient],
                        "larger_quotient": [str(Q) for Q in w.larger_quotient],
                    }
                    for w in verdict.witnesses
                ],
            }
        )
    elif verdict.holds:
        ctx.emit("swap-invariant")
    else:
        ctx.emit(f"not swap-invariant: {len(verdict.witnesses)} violations")
        for witness in verdict.witnesses:
            ctx.emit(f"  {witness}")
    return 0 if verdict.holds else 1


def _emit_family(ctx: CommandContext, family: QuotientFamily, symbol: str) -> None:
    rows = family.rows()
    if ctx.json_output:
        ctx.emit_json(
            {
                "cardinality": family.cardinality,
                "values": [
                    {"quotient": [str(Q) for Q in value], "from": [str(P) for P in producers]}
                    for value, producers in rows
                ],
            }
        )
        return
    for value, producers in rows:
        origin = ", ".join(str(P) for P in producers) if producers else "non-factors"
        ctx.emit(f"{render_set(value)}    <- {origin}")
    ctx.emit(f"# |{symbol}(L)| = {family.cardinality}")


@command(
    "lang", "suff",
    "Print the distinct prefix quotients suff(L) and their number.",
    (arg("file"),),
)
async def SuffTool(ctx: CommandContext, args) -> int:
    """Print the distinct prefix quotients suff(L) and their number."""
    _emit_family(ctx, suffix_quotient_family(read_language(ctx, args.file)), "suff")
    return 0


@command(
    "lang", "pref",
    "Print the distinct suffix quotients pref(L) and their number.",
    (arg("file"),),
)
async def PrefTool(ctx: CommandContext, args) -> int:
    """Print the distinct suffix quotients pref(L) and their number."""
    _emit_family(ctx, prefix_quotient_family(read_language(ctx, args.file)), "pref")
    return 0


@command(
    "lang", "equiv",
    "Decide weak and strong equivalence of two ipomsets with respect to L.",
    (arg("file"), arg("left"), arg("right")),
)
async def EquivalenceTool(ctx: CommandContext, args) -> int:
    """Decide weak and strong equivalence of two ipomsets with respect to L."""
    L = read_language(ctx, args.file)
    P, Q = read_ipomset(args.left), read_ipomset(args.right)
    result = {"weak": weak_equiv(P, Q, L), "strong": strong_equiv(P, Q, L)}
    if ctx.json_output:
        ctx.emit_json(result)
    else:
        ctx.emit(f"weak: {str(result['weak']).lower()}")
        ctx.emit(f"strong: {str(result['strong']).lower()}")
    return 0 if result["strong"] else 1
