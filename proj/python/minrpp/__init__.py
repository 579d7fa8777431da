from ._minrpp import (
    Quiver,
    Heap,
    hillman_grassl,
    rsk,
    generic_coker_jf,
    generating_function_check,
)

__all__ = [
    "Quiver",
    "Heap",
    "hillman_grassl",
    "rsk",
    "generic_coker_jf",
    "generating_function_check",
]
