"""
The qflag command line
======================

Every capability is also reachable from the ``qflag`` command. This script
drives it in-process through ``qflag.cli.main``, which returns the exit code.
"""
from qflag.cli import main

commands = [
    "product --n 3 --u 213 --v 213",
    "product --n 3 --u 1 --v 12 --word --format json",
    "quantize --n 3 --w 312",
    "table --n 2 --what schubert",
    "verify --suite degree2 --type B2",
    "verify --suite heisenberg --n 3",
    "verify --suite nonsense --n 3",
]
for cmd in commands:
    print(f"$ qflag {cmd}")
    code = main(cmd.split())
    print(f"[exit {code}]\n")
