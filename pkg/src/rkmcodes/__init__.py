"""Codes over R_{k,m} = F_2[u,v]/<u^k, v^m, uv - vu> and their binary Gray images."""

from .binary import BinaryCode, SelfDualProfile, WeightEnumerator, extract_parameters
from .constructions import Construction, parse_construction
from .gray import gray_code, lee_weight, phi_k1, phi_km
from .rcodes import RingCode, RingMatrix, inner_product, is_self_dual_free
from .ring import RingElement, RingParams, decode, encode

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "Construction",
    "RingCode",
    "RingElement",
    "RingMatrix",
    "RingParams",
    "SelfDualProfile",
    "WeightEnumerator",
    "decode",
    "encode",
    "extract_parameters",
    "gray_code",
    "inner_product",
    "is_self_dual_free",
    "lee_weight",
    "parse_construction",
    "phi_k1",
    "phi_km",
]
