"""Problem instances, generators and cost encodings."""

from samba_gqw.problems.encoders import (
    default_mis_penalty,
    labs_poly,
    maxcut_poly,
    maxksat_poly,
    mis_poly,
    portfolio_poly,
)
from samba_gqw.problems.generators import (
    DEFAULT_SAT_ALPHA,
    DEFAULT_UNIT_DISK_RADIUS,
    complete_graph,
    gen_erdos_renyi,
    gen_maxksat,
    gen_portfolio,
    gen_tsp,
    gen_unit_disk,
)
from samba_gqw.problems.io import (
    AssetUniverse,
    draw_portfolio,
    instance_from_dict,
    instance_to_dict,
    load_asset_file,
    load_instance,
    save_instance,
)
from samba_gqw.problems.models import (
    GraphInstance,
    Instance,
    Literal,
    PortfolioInstance,
    SatInstance,
    SymmetryTag,
)
from samba_gqw.problems.prepared import PreparedProblem, prepare_instance, prepare_problem
from samba_gqw.problems.registry import compile_instance
from samba_gqw.problems.tsp import (
    bits_per_city,
    decode_positions,
    tsp_decode,
    tsp_encode,
    tsp_poly,
    tsp_qubits,
)

__all__ = [
    "DEFAULT_SAT_ALPHA",
    "DEFAULT_UNIT_DISK_RADIUS",
    "AssetUniverse",
    "GraphInstance",
    "Instance",
    "Literal",
    "PortfolioInstance",
    "PreparedProblem",
    "SatInstance",
    "SymmetryTag",
    "bits_per_city",
    "compile_instance",
    "complete_graph",
    "decode_positions",
    "default_mis_penalty",
    "draw_portfolio",
    "gen_erdos_renyi",
    "gen_maxksat",
    "gen_portfolio",
    "gen_tsp",
    "gen_unit_disk",
    "instance_from_dict",
    "instance_to_dict",
    "labs_poly",
    "load_asset_file",
    "load_instance",
    "maxcut_poly",
    "maxksat_poly",
    "mis_poly",
    "portfolio_poly",
    "prepare_instance",
    "prepare_problem",
    "save_instance",
    "tsp_decode",
    "tsp_encode",
    "tsp_poly",
    "tsp_qubits",
]
