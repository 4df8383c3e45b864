"""Key generation, block encryption, and key pair validation."""

import random

import pytest

from ringrsa import (
    CiphertextBlock,
    HnfBasis,
    InertPrimeMode,
    PrimeElement,
    PrimeNormElementMode,
    PrivateKey,
    PublicKey,
    SearchExhaustedError,
    coset_box,
    cyclotomic_field,
    decrypt_block,
    encrypt_block,
    keygen,
    keypair_from_primes,
    norm,
    quadratic_field,
    validate_keypair,
)

FIELD = quadratic_field(2)


def toy_keypair(e_choice=5):
    alpha = PrimeElement(FIELD.ring.element((3, 0)), 9)
    beta = PrimeElement(FIELD.ring.element((5, 0)), 25)
    return keypair_from_primes(FIELD, alpha, beta, e_choice=e_choice)


class TestToyKeypair:
    """The Q(sqrt(2)) key with rational primes 3 and 5 and e = 5."""

    def test_exact_values(self):
        pub, priv = toy_keypair()
        assert pub.lattice.entries == ((15, 0), (0, 15))
        assert pub.e == 5
        assert priv.phi == 192
        assert priv.d == 77
        assert validate_keypair(pub, priv)

    def test_block_roundtrip(self):
        pub, priv = toy_keypair()
        ct = encrypt_block(pub, (1, 1))
        assert ct.vector.coeffs == (11, 14)
        assert decrypt_block(priv, ct).coeffs == (1, 1)

    def test_default_e_falls_back_below_65537(self):
        pub, _ = toy_keypair(e_choice=None)
        assert pub.e == 5  # smallest exponent >= 3 coprime to 192


class TestExponentSelection:
    def test_requested_e_must_be_coprime(self):
        with pytest.raises(ValueError, match="not coprime"):
            toy_keypair(e_choice=4)

    @pytest.mark.parametrize("e", [0, -5, 192, 500])
    def test_requested_e_must_be_in_range(self, e):
        with pytest.raises(ValueError, match="out of range"):
            toy_keypair(e_choice=e)

    def test_tiny_totient_has_no_exponent(self):
        field = quadratic_field(3)
        alpha = PrimeElement(field.ring.element((1, 1)), 2)
        beta = PrimeElement(field.ring.element((0, 1)), 3)
        # phi = (2-1)(3-1) = 2 leaves no candidate e
        with pytest.raises(ValueError, match="no valid e"):
            keypair_from_primes(field, alpha, beta)

    def test_default_is_65537_when_totient_allows(self):
        rng = random.Random(3)
        pub, priv = keygen(FIELD, InertPrimeMode(bits=16), rng=rng)
        assert pub.e == 65537
        assert pub.e * priv.d % priv.phi == 1


class TestKeygen:
    def test_inert_mode_gives_scalar_primes_and_diagonal_lattice(self):
        rng = random.Random(41)
        pub, priv = keygen(FIELD, InertPrimeMode(bits=8), rng=rng)
        assert priv.alpha.coeffs[1] == 0
        assert priv.beta.coeffs[1] == 0
        p, q = priv.alpha.coeffs[0], priv.beta.coeffs[0]
        assert p != q
        assert pub.lattice.entries == ((p * q, 0), (0, p * q))
        assert validate_keypair(pub, priv)

    def test_element_mode_gives_nonscalar_primes(self):
        rng = random.Random(42)
        pub, priv = keygen(FIELD, PrimeNormElementMode(coeff_bound=20), rng=rng)
        assert any(priv.alpha.coeffs[1:])
        assert any(priv.beta.coeffs[1:])
        assert validate_keypair(pub, priv)

    def test_seeded_runs_reproduce(self):
        a = keygen(FIELD, InertPrimeMode(bits=10), rng=random.Random(7))
        b = keygen(FIELD, InertPrimeMode(bits=10), rng=random.Random(7))
        assert a == b

    def test_quartic_field(self):
        rng = random.Random(5)
        field = cyclotomic_field(5)
        pub, priv = keygen(field, InertPrimeMode(bits=6), rng=rng)
        assert pub.lattice.dimension == 4
        p = priv.alpha.coeffs[0]
        assert priv.phi % (p**4 - 1) == 0
        assert validate_keypair(pub, priv)

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError, match="unknown keygen mode"):
            keygen(FIELD, object())

    def test_associate_only_pool_exhausts(self):
        # bound 1 in Q(sqrt(2)) only ever finds +-sqrt(2), all associates
        rng = random.Random(0)
        with pytest.raises(SearchExhaustedError, match="non-associate"):
            keygen(FIELD, PrimeNormElementMode(coeff_bound=1), rng=rng)


class TestKeyObjects:
    def test_public_exponent_bounds(self):
        lattice = HnfBasis(((15, 0), (0, 15)))
        with pytest.raises(ValueError, match="out of range"):
            PublicKey(FIELD, lattice, 0)
        with pytest.raises(ValueError, match="out of range"):
            PublicKey(FIELD, lattice, 225)

    def test_lattice_dimension_must_match_degree(self):
        lattice = HnfBasis(((15, 0), (0, 15)))
        with pytest.raises(ValueError, match="dimension"):
            PublicKey(cyclotomic_field(5), lattice, 5)

    def test_private_key_consistency_enforced(self):
        pub, priv = toy_keypair()
        with pytest.raises(ValueError, match="totient inconsistent"):
            PrivateKey(FIELD, priv.alpha, priv.beta, 77, 193, priv.lattice)
        with pytest.raises(ValueError, match="private exponent"):
            PrivateKey(FIELD, priv.alpha, priv.beta, 0, 192, priv.lattice)
        with pytest.raises(ValueError, match="lattice inconsistent"):
            PrivateKey(
                FIELD, priv.alpha, priv.beta, 77, 192,
                HnfBasis(((15, 14), (0, 1))),
            )


class TestBlockOperations:
    def test_accepted_block_forms(self):
        pub, priv = toy_keypair()
        as_tuple = encrypt_block(pub, (1, 1))
        as_elem = encrypt_block(pub, FIELD.ring.element((1, 1)))
        as_block = encrypt_block(pub, CiphertextBlock(FIELD.ring.element((1, 1))))
        assert as_tuple == as_elem == as_block
        assert decrypt_block(priv, as_tuple.vector.coeffs).coeffs == (1, 1)

    def test_message_outside_box_rejected(self):
        pub, _ = toy_keypair()
        with pytest.raises(ValueError, match="message outside coset box"):
            encrypt_block(pub, (15, 0))
        with pytest.raises(ValueError, match="message outside coset box"):
            encrypt_block(pub, (-1, 3))

    def test_ciphertext_outside_box_rejected(self):
        _, priv = toy_keypair()
        with pytest.raises(ValueError, match="ciphertext outside coset box"):
            decrypt_block(priv, (15, 3))

    def test_wrong_length_rejected(self):
        pub, _ = toy_keypair()
        with pytest.raises(ValueError):
            encrypt_block(pub, (1, 1, 1))

    @pytest.mark.parametrize(
        "mode",
        [InertPrimeMode(bits=8), PrimeNormElementMode(coeff_bound=30)],
        ids=["inert", "element"],
    )
    def test_random_roundtrips(self, mode):
        rng = random.Random(99)
        pub, priv = keygen(FIELD, mode, rng=rng)
        box = coset_box(pub.lattice)
        for _ in range(25):
            msg = tuple(rng.randrange(r) for r in box.radices)
            assert decrypt_block(priv, encrypt_block(pub, msg)).coeffs == msg


class TestValidateKeypair:
    def test_mismatched_fields(self):
        pub, _ = toy_keypair()
        other = quadratic_field(-1)
        alpha = PrimeElement(other.ring.element((3, 0)), 9)
        beta = PrimeElement(other.ring.element((1, 1)), 2)  # 1+i, norm 2
        _, priv = keypair_from_primes(other, alpha, beta)
        assert not validate_keypair(pub, priv)

    def test_crossed_keys_fail(self):
        pub1, priv1 = toy_keypair()
        rng = random.Random(12)
        pub2, priv2 = keygen(FIELD, InertPrimeMode(bits=8), rng=rng)
        assert not validate_keypair(pub1, priv2)
        assert not validate_keypair(pub2, priv1)

    def test_wrong_exponent_pairing_fails(self):
        pub, priv = toy_keypair()
        other_pub = PublicKey(FIELD, pub.lattice, 7)
        assert not validate_keypair(other_pub, priv)
