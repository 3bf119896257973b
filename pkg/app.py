import sys

import click
from dotenv import load_dotenv

from commands.cycles import cycles
from commands.entropy import entropy
from commands.genfun import genfun
from commands.tile import tile
from commands.tutte import tutte
from commands.verify import verify
from services.config import RunConfig
from services.errors import AccuracyError, InvariantError, TilingError
from utils.logging_utils import set_verbosity, setup_logger

load_dotenv()

logger = setup_logger(__name__)


class BadInput(click.ClickException):
    exit_code = 2


class CheckFailed(click.ClickException):
    exit_code = 1


class TetroGroup(click.Group):
    """Maps service errors to exit codes: 2 for bad input or budgets, 1 for failed checks."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (InvariantError, AccuracyError) as exc:
            logger.error("%s: %s", type(exc).__name__, exc)
            raise CheckFailed(str(exc)) from exc
        except TilingError as exc:
            raise BadInput(f"{type(exc).__name__}: {exc}") from exc


@click.group(cls=TetroGroup)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--seed", type=int, default=None, help="Seed for randomized checks (TETRO_SEED).")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker cap (TETRO_THREADS).")
@click.option("--tol", type=float, default=None, help="Numerical tolerance (TETRO_TOL).")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG on stderr.")
@click.pass_context
def cli(ctx, as_json, seed, threads, tol, verbose):
    """T-tetromino tilings, the multivariate Tutte polynomial and tiling entropy."""
    set_verbosity(verbose)
    try:
        ctx.obj = RunConfig.from_env(output="json" if as_json else None, seed=seed, threads=threads, tol=tol)
    except TilingError as exc:
        raise BadInput(str(exc)) from exc


for group in (tile, genfun, cycles, tutte, verify, entropy):
    cli.add_command(group)


def main(argv=None):
    return cli.main(args=argv, prog_name="tetro")


if __name__ == "__main__":
    sys.exit(main())
