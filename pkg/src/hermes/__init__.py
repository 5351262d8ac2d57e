"""List decoding of Hermitian codes with Gröbner bases of F[x]-modules."""

from .bounds import DecoderParams, choose_params
from .code import HermitianCode, make_code
from .decode import DecodeResult, list_decode
from .errors import DomainError, ParameterError
from .galois import GF, make_field
from .interp import interpolate, membership
from .roots import exhaustive_roots, find_roots

__all__ = [
    "DecodeResult",
    "DecoderParams",
    "DomainError",
    "GF",
    "HermitianCode",
    "ParameterError",
    "choose_params",
    "exhaustive_roots",
    "find_roots",
    "interpolate",
    "list_decode",
    "make_code",
    "make_field",
    "membership",
]

__version__ = "0.1.0"
