"""Main CLI module for garside."""

import logging
import math
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from enum import StrEnum
from pathlib import Path
from typing import Annotated

import typer
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from garside import __version__
from garside.bench import run_bench
from garside.census import run_census
from garside.config import Settings, configure_logging, find_config, load_config
from garside.conjugacy import are_conjugate, conjugate_class_ge, summit_class
from garside.core.element import GroupElement
from garside.errors import BudgetExceededError, GarsideError, InvariantError
from garside.models.entities import CensusRow
from garside.monoids import Monoid, get_structure
from garside.profiles import merge_profile
from garside.reporter import (
    bench_json,
    bench_table,
    census_csv,
    census_json,
    census_table,
    save_report,
)
from garside.words import element_word, parse_element

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="garside",
    help="Normal forms and conjugacy classes in braid groups (Artin and Birman-Ko-Lee monoids)",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INVARIANT = 3


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"
    TABLE = "table"


MonoidOption = Annotated[
    Monoid, typer.Option("--monoid", case_sensitive=False, help="artin or bkl")
]
StrandsOption = Annotated[int, typer.Option("--n", min=2, help="Number of strands")]
BudgetOption = Annotated[
    int | None, typer.Option("--budget", min=1, help="Max nodes per conjugacy graph")
]
ParallelOption = Annotated[
    int | None, typer.Option("--parallel", min=1, help="Worker threads")
]
WordArgument = Annotated[list[str], typer.Argument(help="Word, e.g. 's1^3 s2' or 'a(3,1) D^-1'")]


def _settings(ctx: typer.Context) -> Settings:
    settings = ctx.obj
    return settings if isinstance(settings, Settings) else Settings()


def _with_search(
    settings: Settings, budget: int | None = None, parallel: int | None = None
) -> Settings:
    update: dict[str, int] = {}
    if budget is not None:
        update["budget"] = budget
    if parallel is not None:
        update["parallel"] = parallel
    return settings.model_copy(update={"search": settings.search.model_copy(update=update)})


@contextmanager
def _cli_errors() -> Iterator[None]:
    """Map library errors onto exit codes: 1 usage, 2 budget, 3 invariant."""
    try:
        yield
    except BudgetExceededError as e:
        err_console.print(f"[red]Budget exceeded:[/red] {e}")
        raise typer.Exit(code=EXIT_BUDGET) from e
    except InvariantError as e:
        err_console.print(f"[red]Internal invariant violated:[/red] {e}")
        raise typer.Exit(code=EXIT_INVARIANT) from e
    except (GarsideError, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=EXIT_USAGE) from e


def _parse(text: list[str], monoid: Monoid, n: int) -> GroupElement:
    return parse_element(" ".join(text), monoid, n)


def _echo_elements(elements: list[GroupElement], limit: int | None) -> None:
    shown = elements if limit is None else elements[:limit]
    for element in shown:
        typer.echo(f"  {element_word(element)}")
    if len(shown) < len(elements):
        typer.echo(f"  ... and {len(elements) - len(shown)} more")


def parse_length_range(value: str) -> range:
    """`A..B` (inclusive) or a single length."""
    try:
        if ".." in value:
            low, high = value.split("..", 1)
            lengths = range(int(low), int(high) + 1)
        else:
            lengths = range(int(value), int(value) + 1)
    except ValueError as e:
        raise typer.BadParameter(f"expected A..B or an integer, got {value!r}") from e
    if not lengths or lengths.start < 0:
        raise typer.BadParameter(f"empty or negative length range {value!r}")
    return lengths


@app.callback()
def global_options(
    ctx: typer.Context,
    config_path: Annotated[
        str | None, typer.Option("--config", help="Path to garside.yaml")
    ] = None,
    profile: Annotated[
        str | None, typer.Option("--profile", help="Profile preset: default, fast, paranoid")
    ] = None,
    log_level: Annotated[str | None, typer.Option("--log-level", help="Root log level")] = None,
) -> None:
    """Global options applied before subcommands."""
    try:
        if config_path is not None or find_config().exists():
            settings = load_config(config_path, profile)
        elif profile is not None:
            settings = Settings(**merge_profile({"profile": profile}, profile))
        else:
            settings = Settings()
    except (ValidationError, yaml.YAMLError, OSError, ValueError, TypeError) as e:
        err_console.print(f"[red]Config error: {e}[/red]")
        raise typer.Exit(code=EXIT_USAGE) from e
    configure_logging(log_level or settings.log_level)
    ctx.obj = settings


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(__version__)


@app.command()
def nf(
    word: WordArgument,
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
) -> None:
    """Print the left normal form Delta^p a_1 ... a_l of a word."""
    with _cli_errors():
        a = _parse(word, monoid, n)
        structure = a.structure
        typer.echo(f"p = {a.p}")
        typer.echo(
            "factors = " + " ".join(f"({structure.format_simple(f)})" for f in a.factors)
        )
        typer.echo(f"inf = {a.inf}, sup = {a.sup}, canonical length = {a.canonical_length}")
        typer.echo(f"word = {element_word(a)}")


@app.command()
def conj(
    ctx: typer.Context,
    first: Annotated[str, typer.Argument(help="First word")],
    second: Annotated[str, typer.Argument(help="Second word")],
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
    budget: BudgetOption = None,
    parallel: ParallelOption = None,
) -> None:
    """Decide whether two words are conjugate and print a witness c with c^-1 a c = b."""
    settings = _with_search(_settings(ctx), budget, parallel)
    with _cli_errors():
        a = parse_element(first, monoid, n)
        b = parse_element(second, monoid, n)
        result = are_conjugate(
            a,
            b,
            budget=settings.search.budget,
            parallel=settings.search.parallel,
            fast_path=settings.search.fast_path,
        )
    if result.is_conjugate and result.witness is not None:
        typer.echo("YES")
        typer.echo(f"witness = {element_word(result.witness)}")
    else:
        typer.echo("NO")
    typer.echo(f"nodes = {result.nodes}")


@app.command()
def summit(
    ctx: typer.Context,
    word: WordArgument,
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
    budget: BudgetOption = None,
    parallel: ParallelOption = None,
    limit: Annotated[
        int | None, typer.Option("--limit", min=0, help="Max elements to print")
    ] = None,
) -> None:
    """Print the summit class of a word."""
    settings = _with_search(_settings(ctx), budget, parallel)
    with _cli_errors():
        graph = summit_class(
            _parse(word, monoid, n),
            budget=settings.search.budget,
            parallel=settings.search.parallel,
            fast_path=settings.search.fast_path,
            verify=settings.search.verify_witnesses,
        )
    root = graph.root
    if root is None:
        raise typer.Exit(code=EXIT_INVARIANT)
    typer.echo(f"inf = {root.inf}, sup = {root.sup}")
    typer.echo(f"size = {len(graph)}")
    _echo_elements([graph.nodes[key] for key in graph.keys()], limit)


@app.command()
def posclass(
    ctx: typer.Context,
    word: WordArgument,
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
    m: Annotated[int, typer.Option("--m", help="Infimum bound; 0 gives positive conjugates")] = 0,
    budget: BudgetOption = None,
    parallel: ParallelOption = None,
    limit: Annotated[
        int | None, typer.Option("--limit", min=0, help="Max elements to print")
    ] = None,
) -> None:
    """Print the conjugates of a word with infimum at least m."""
    settings = _with_search(_settings(ctx), budget, parallel)
    with _cli_errors():
        graph = conjugate_class_ge(
            _parse(word, monoid, n),
            m,
            budget=settings.search.budget,
            parallel=settings.search.parallel,
            fast_path=settings.search.fast_path,
            verify=settings.search.verify_witnesses,
        )
    if graph.is_empty:
        typer.echo(f"size = 0 (no conjugate has infimum >= {m})")
        return
    typer.echo(f"size = {len(graph)}")
    _echo_elements([graph.nodes[key] for key in graph.keys()], limit)


@app.command("enumerate")
def enumerate_census(
    ctx: typer.Context,
    lengths: Annotated[
        range,
        typer.Option("--l", parser=parse_length_range, help="Word lengths, A..B or one integer"),
    ],
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
    output_format: Annotated[
        OutputFormat, typer.Option("--format", case_sensitive=False, help="csv, json or table")
    ] = OutputFormat.CSV,
    budget: BudgetOption = None,
    parallel: ParallelOption = None,
    use_cache: Annotated[
        bool | None, typer.Option("--cache/--no-cache", help="Use the census cache directory")
    ] = None,
    output: Annotated[
        Path | None, typer.Option("--output", "-o", help="Also write the rows to this file")
    ] = None,
) -> None:
    """Class census of positive words of each length: CC+, max C+, max Csum."""
    settings = _with_search(_settings(ctx), budget)
    census_update: dict[str, object] = {}
    if parallel is not None:
        census_update["parallel"] = parallel
    if use_cache is not None:
        census_update["use_cache"] = use_cache
    settings = settings.model_copy(
        update={"census": settings.census.model_copy(update=census_update)}
    )
    with _cli_errors():
        structure = get_structure(monoid, n)
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Census of {structure}...", total=None)

            def on_row(row: CensusRow, cached: bool) -> None:
                source = "cache" if cached else "computed"
                progress.update(task, description=f"{structure} l={row.l} ({source})")

            rows = run_census(structure, lengths, settings, on_row=on_row)

    if output_format == OutputFormat.TABLE:
        console.print(census_table(rows, title=f"Class census of {structure}"))
        body = census_csv(rows)
    else:
        body = census_csv(rows) if output_format == OutputFormat.CSV else census_json(rows) + "\n"
        typer.echo(body, nl=False)
    if output is not None:
        fmt = "json" if output_format == OutputFormat.JSON else "csv"
        save_report(body, output, fmt)


@app.command()
def bench(
    ctx: typer.Context,
    length: Annotated[int, typer.Option("--l", min=1, help="Word length of a")],
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
    trials: Annotated[int, typer.Option("--trials", min=1, help="Number of pairs")] = 20,
    seed: Annotated[int, typer.Option("--seed", help="Random seed")] = 0,
    output_format: Annotated[
        OutputFormat, typer.Option("--format", case_sensitive=False, help="json or table")
    ] = OutputFormat.TABLE,
    reproducible: Annotated[
        bool, typer.Option("--reproducible", help="Omit timing fields from JSON")
    ] = False,
    budget: BudgetOption = None,
) -> None:
    """Compare minimal simple sets with the full simple set on random conjugate pairs."""
    settings = _with_search(_settings(ctx), budget)
    with _cli_errors():
        report = run_bench(get_structure(monoid, n), length, trials, seed, settings)
    if output_format == OutputFormat.TABLE:
        console.print(bench_table(report))
        console.print(
            f"max conjugations per node: minimal {report.max_minimal_per_node:.2f} "
            f"(atoms {report.atom_count}), {report.max_minimal_total_per_node:.2f} with rho_x, "
            f"full-S {report.max_oracle_per_node:.0f} "
            f"(#S = {report.simple_count})"
        )
    else:
        typer.echo(bench_json(report, reproducible=reproducible))


@app.command("count-simples")
def count_simples(
    ctx: typer.Context,
    monoid: MonoidOption = Monoid.ARTIN,
    n: StrandsOption = 3,
) -> None:
    """Count the simple elements by explicit generation."""
    settings = _settings(ctx)
    with _cli_errors():
        structure = get_structure(monoid, n)
        count = structure.count_simples(settings.caps.simple_cap(structure.monoid))
    if monoid == Monoid.BKL:
        expected, name = math.comb(2 * n, n) // (n + 1), "Catalan"
    else:
        expected, name = math.factorial(n), "n!"
    table = Table(title=f"Simple elements of {structure}")
    table.add_column("#S", justify="right", style="green")
    table.add_column(name, justify="right")
    table.add_column("check")
    table.add_row(str(count), str(expected), "ok" if count == expected else "MISMATCH")
    console.print(table)
    if count != expected:
        raise typer.Exit(code=EXIT_INVARIANT)


def _click_exception_type() -> type[Exception]:
    """ClickException of the click build typer runs on, bundled or external."""
    for cls in typer.BadParameter.__mro__:
        if cls.__name__ == "ClickException":
            return cls
    raise ImportError("typer.BadParameter does not derive from ClickException")


ClickException = _click_exception_type()


def main() -> None:
    """Application entry point; click usage errors exit with 1 like other input errors."""
    configure_logging()
    try:
        code = app(standalone_mode=False)
    except ClickException as e:
        e.show()  # pyright: ignore[reportAttributeAccessIssue]
        sys.exit(EXIT_USAGE)
    except typer.Abort:
        err_console.print("Aborted.")
        sys.exit(EXIT_USAGE)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
