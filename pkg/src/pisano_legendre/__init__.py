"""k-Pisano-Legendre primes and (a, b)-Fibonacci-Legendre cordial labelings."""

from .kernels import BACKEND
from .numtheory import (
    InitialPair,
    LambdaPartition,
    PLRecord,
    classify,
    fib_mod,
    is_prime,
    iter_fib_mod,
    lambda_partition,
    legendre_symbol,
    order_of_apparition,
    pisano_period,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "InitialPair",
    "LambdaPartition",
    "PLRecord",
    "classify",
    "fib_mod",
    "is_prime",
    "iter_fib_mod",
    "lambda_partition",
    "legendre_symbol",
    "order_of_apparition",
    "pisano_period",
]
