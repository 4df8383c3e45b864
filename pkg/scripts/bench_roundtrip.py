#!/usr/bin/env python3
"""Throughput of block encryption across fields and prime sizes.

Times keygen plus a payload roundtrip for a few representative
configurations and prints bytes-per-second figures.  Run from the repo
root after an editable install:

    python3 scripts/bench_roundtrip.py [--size KIB]
"""

import argparse
import random
import time

from ringrsa import (
    InertPrimeMode,
    coset_box,
    decode_blocks,
    decrypt_block,
    encode_bytes,
    encrypt_block,
    keygen,
    parse_field_spec,
)

CONFIGS = [
    ("quadratic:d=2", 32),
    ("quadratic:d=2", 48),
    ("quadratic:d=2", 64),
    ("cyclotomic:m=8", 16),
    ("cyclotomic:m=8", 32),
    ("cyclotomic:m=5", 16),
]


def bench(spec, bits, payload, rng):
    field = parse_field_spec(spec)
    t0 = time.monotonic()
    pub, priv = keygen(field, InertPrimeMode(bits=bits), rng=rng)
    t_key = time.monotonic() - t0
    box = coset_box(pub.lattice)

    t0 = time.monotonic()
    blocks = [encrypt_block(pub, b).vector.coeffs for b in encode_bytes(box, payload)]
    t_enc = time.monotonic() - t0

    t0 = time.monotonic()
    out = decode_blocks(box, [decrypt_block(priv, b).coeffs for b in blocks])
    t_dec = time.monotonic() - t0
    assert out == payload

    size = len(payload)
    print(
        f"{spec:18s} bits={bits:3d}  keygen {t_key*1e3:7.1f} ms  "
        f"encrypt {size/t_enc/1024:8.1f} KiB/s  "
        f"decrypt {size/t_dec/1024:8.1f} KiB/s  "
        f"({len(blocks)} blocks)"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=64, help="payload KiB")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    payload = rng.randbytes(args.size * 1024)
    print(f"payload: {args.size} KiB")
    for spec, bits in CONFIGS:
        bench(spec, bits, payload, rng)


if __name__ == "__main__":
    main()
