"""Line-oriented text serialization for keys and ciphertexts.

Files are UTF-8 with LF newlines, one `name = value` pair per line, in a
fixed field order, with no timestamps, so a file is a deterministic
function of its contents.  Lines starting with `#` are comments and are
ignored by the parsers; the canonical public rendering (the data lines
only) feeds the SHA-256 key fingerprint, of which the first 16 hex digits
are stored inside ciphertext files.  Vectors are comma-separated integers
and matrices are semicolon-separated rows.
"""

from __future__ import annotations

import hashlib

from .errors import CiphertextFormatError, KeyFileError
from .fields import parse_field_spec
from .lattice import HnfBasis
from .scheme import PrivateKey, PublicKey

__all__ = [
    "FORMAT_VERSION",
    "CIPHERTEXT_MAGIC",
    "render_public",
    "parse_public",
    "render_private",
    "parse_private",
    "fingerprint",
    "render_ciphertext",
    "parse_ciphertext",
]

FORMAT_VERSION = 1
CIPHERTEXT_MAGIC = "ringrsa-ciphertext-v1"


def _render_vector(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


def _render_matrix(rows) -> str:
    return ";".join(_render_vector(row) for row in rows)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise KeyFileError(f"bad integer vector: {text!r}") from None


def _parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_parse_vector(row) for row in text.split(";"))


def _parse_pairs(text: str, expected: tuple[str, ...], what: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise KeyFileError(f"{what}: line {lineno} is not 'name = value'")
        name = name.strip()
        if name not in expected:
            raise KeyFileError(f"{what}: unknown field {name!r}")
        if name in pairs:
            raise KeyFileError(f"{what}: duplicate field {name!r}")
        pairs[name] = value.strip()
    missing = [name for name in expected if name not in pairs]
    if missing:
        raise KeyFileError(f"{what}: missing field {missing[0]!r}")
    return pairs


def _parse_int(pairs: dict[str, str], name: str, what: str) -> int:
    try:
        return int(pairs[name])
    except ValueError:
        raise KeyFileError(f"{what}: field {name!r} is not an integer") from None


def _check_version(pairs: dict[str, str], what: str) -> None:
    if _parse_int(pairs, "format_version", what) != FORMAT_VERSION:
        raise KeyFileError(f"{what}: unsupported format version")


_PUBLIC_FIELDS = ("format_version", "role", "field", "lattice", "e")
_PRIVATE_FIELDS = ("format_version", "role", "field", "alpha", "beta", "d", "e")


def render_public(pub: PublicKey) -> str:
    lines = [
        f"format_version = {FORMAT_VERSION}",
        "role = public",
        f"field = {pub.field.spec_string()}",
        f"lattice = {_render_matrix(pub.lattice.entries)}",
        f"e = {pub.e}",
    ]
    return "\n".join(lines) + "\n"


def parse_public(text: str) -> PublicKey:
    pairs = _parse_pairs(text, _PUBLIC_FIELDS, "public key file")
    _check_version(pairs, "public key file")
    if pairs["role"] != "public":
        raise KeyFileError("public key file: wrong role")
    try:
        field = parse_field_spec(pairs["field"])
        basis = HnfBasis(_parse_matrix(pairs["lattice"]))
        return PublicKey(field, basis, _parse_int(pairs, "e", "public key file"))
    except KeyFileError:
        raise
    except ValueError as exc:
        raise KeyFileError(f"public key file: {exc}") from None


def fingerprint(pub: PublicKey) -> str:
    """First 16 hex digits of SHA-256 over the canonical public rendering."""
    return hashlib.sha256(render_public(pub).encode()).hexdigest()[:16]


def render_private(priv: PrivateKey, e: int) -> str:
    lines = [
        f"format_version = {FORMAT_VERSION}",
        "role = private",
        f"field = {priv.field.spec_string()}",
        f"alpha = {_render_vector(priv.alpha.coeffs)}",
        f"beta = {_render_vector(priv.beta.coeffs)}",
        f"d = {priv.d}",
        f"e = {e}",
    ]
    return "\n".join(lines) + "\n"


def parse_private(text: str) -> tuple[PrivateKey, int]:
    """Rebuild the private key; returns it with the recorded public e.

    The lattice and totient are recomputed from alpha and beta, so a
    parsed key is internally consistent by construction.
    """
    from .lattice import hnf
    from .ring import conv_mul, ideal_matrix, norm

    pairs = _parse_pairs(text, _PRIVATE_FIELDS, "private key file")
    _check_version(pairs, "private key file")
    if pairs["role"] != "private":
        raise KeyFileError("private key file: wrong role")
    try:
        field = parse_field_spec(pairs["field"])
        ctx = field.ring
        alpha = ctx.element(_parse_vector(pairs["alpha"]))
        beta = ctx.element(_parse_vector(pairs["beta"]))
        phi = (abs(norm(ctx, alpha)) - 1) * (abs(norm(ctx, beta)) - 1)
        basis = hnf(ideal_matrix(ctx, conv_mul(ctx, alpha, beta)).entries)
        d = _parse_int(pairs, "d", "private key file")
        priv = PrivateKey(field, alpha, beta, d, phi, basis)
        return priv, _parse_int(pairs, "e", "private key file")
    except KeyFileError:
        raise
    except ValueError as exc:
        raise KeyFileError(f"private key file: {exc}") from None


def render_ciphertext(fp: str, blocks) -> str:
    lines = [
        f"magic = {CIPHERTEXT_MAGIC}",
        f"fingerprint = {fp}",
        f"blocks = {len(blocks)}",
    ]
    lines.extend(f"block = {_render_vector(b)}" for b in blocks)
    return "\n".join(lines) + "\n"


def parse_ciphertext(text: str) -> tuple[str, list[tuple[int, ...]]]:
    header: dict[str, str] = {}
    blocks: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise CiphertextFormatError(f"ciphertext: line {lineno} is not 'name = value'")
        name, value = name.strip(), value.strip()
        if name == "block":
            try:
                blocks.append(tuple(int(part) for part in value.split(",")))
            except ValueError:
                raise CiphertextFormatError(f"ciphertext: bad block on line {lineno}") from None
        elif name in ("magic", "fingerprint", "blocks"):
            if name in header:
                raise CiphertextFormatError(f"ciphertext: duplicate field {name!r}")
            header[name] = value
        else:
            raise CiphertextFormatError(f"ciphertext: unknown field {name!r}")
    for name in ("magic", "fingerprint", "blocks"):
        if name not in header:
            raise CiphertextFormatError(f"ciphertext: missing field {name!r}")
    if header["magic"] != CIPHERTEXT_MAGIC:
        raise CiphertextFormatError("ciphertext: bad magic")
    try:
        declared = int(header["blocks"])
    except ValueError:
        raise CiphertextFormatError("ciphertext: bad block count") from None
    if declared != len(blocks):
        raise CiphertextFormatError("ciphertext: block count mismatch")
    if len({len(b) for b in blocks}) > 1:
        raise CiphertextFormatError("ciphertext: ragged blocks")
    return header["fingerprint"], blocks
