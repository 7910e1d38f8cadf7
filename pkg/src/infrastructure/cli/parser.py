"""Argument parser for the ``splitcubic`` command."""
from __future__ import annotations

import argparse
from typing import NoReturn, Optional

from ...core.config import settings
from ...core.domain.number_field import PRESETS
from ...core.exceptions import UsageError
from .renderers import OutputFormat


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _output_options() -> argparse.ArgumentParser:
    common = CommandParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help=f"report format (default: {settings.default_format})",
    )
    common.add_argument(
        "--json",
        dest="format",
        action="store_const",
        const=OutputFormat.JSON.value,
        help="shorthand for --format json",
    )
    return common


def _field_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--field",
        choices=sorted(PRESETS),
        default=None,
        help="number field preset (default: Qzeta12 for surds, Qzeta3 otherwise)",
    )


def _command(
    subparsers: "argparse._SubParsersAction[CommandParser]",
    name: str,
    command: str,
    help_text: str,
    common: argparse.ArgumentParser,
) -> CommandParser:
    parser = subparsers.add_parser(name, help=help_text, parents=[common])
    parser.set_defaults(command=command)
    return parser


def build_parser(prog: Optional[str] = None) -> CommandParser:
    common = _output_options()
    parser = CommandParser(
        prog=prog or settings.app_name,
        description="Planes on split cubic fourfolds and certificates for their lattices.",
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    parser.add_argument("--debug", action="store_true", help="log at DEBUG level")
    parser.add_argument(
        "--log-format",
        choices=["console", "json"],
        default=None,
        help=f"diagnostic log format on standard error (default: {settings.log_format})",
    )
    commands = parser.add_subparsers(dest="group", metavar="COMMAND", required=True)

    count = _command(commands, "count", "count", "plane count for two Hesse parameters", common)
    count.add_argument("--l1", required=True, help="first Hesse parameter, e.g. 2 or 1+sqrt3")
    count.add_argument("--l2", required=True, help="second Hesse parameter")
    count.add_argument(
        "--enumerate",
        action="store_true",
        help="construct every plane and report counts by rank",
    )
    _field_option(count)

    fermat = commands.add_parser("fermat", help="Fermat cubic fourfold catalog")
    fermat_commands = fermat.add_subparsers(dest="action", metavar="ACTION", required=True)
    _command(fermat_commands, "planes", "fermat planes", "all 405 planes", common)
    _command(fermat_commands, "gram", "fermat gram", "Gram matrix of the 19 basis planes", common)
    verify = _command(
        fermat_commands,
        "verify-appendix",
        "fermat verify-appendix",
        "recompute the basis Gram matrix and diff it against the golden file",
        common,
    )
    verify.add_argument(
        "--golden-dir", default=None, help="directory holding appendix_M_plus_I.json"
    )
    decompose = _command(
        fermat_commands,
        "decompose",
        "fermat decompose",
        "coordinates of the L-planes in the basis",
        common,
    )
    decompose.add_argument(
        "--index", default=None, help="a single label such as J1,(w,1,1); all 108 when omitted"
    )

    torsion = _command(
        commands, "ds-torsion", "ds-torsion", "torsion test for the rho relations", common
    )
    torsion.add_argument(
        "--scale", type=int, default=1, help="multiply the relations by this integer"
    )

    lattice = commands.add_parser("lattice", help="integral lattice tools")
    lattice_commands = lattice.add_subparsers(dest="action", metavar="ACTION", required=True)
    invariants = _command(
        lattice_commands,
        "invariants",
        "lattice invariants",
        "rank, determinant, SNF and definiteness of a Gram matrix",
        common,
    )
    invariants.add_argument("--input", required=True, help="JSON file with an integer matrix")
    im_phi = _command(
        lattice_commands,
        "im-phi",
        "lattice im-phi",
        "Gram matrix of the cylinder image for degree d",
        common,
    )
    im_phi.add_argument("-d", "--degree", type=int, default=3, help="degree d >= 3")
    _command(
        lattice_commands,
        "certify",
        "lattice certify",
        "transcendental lattice certificate for the Fermat cubic fourfold",
        common,
    )

    sm = _command(
        commands,
        "shioda-mitani",
        "shioda-mitani",
        "period points of a positive definite even binary form",
        common,
    )
    sm.add_argument("-a", type=int, required=True)
    sm.add_argument("-b", type=int, required=True)
    sm.add_argument("-c", type=int, required=True)

    flexes = _command(
        commands, "flex-table", "flex-table", "flexes and tangents of a Hesse cubic", common
    )
    flexes.add_argument("--lambda", dest="lam", required=True, help="Hesse parameter")
    _field_option(flexes)

    aut = _command(commands, "aut-order", "aut-order", "order of Aut of a Hesse cubic", common)
    aut.add_argument("--lambda", dest="lam", required=True, help="Hesse parameter")
    aut.add_argument(
        "--closure", action="store_true", help="also close the generators and report the order"
    )
    _field_option(aut)

    return parser
