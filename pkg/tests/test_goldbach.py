import numpy as np
import pytest

from gbcomet import (
    OutOfRangeError,
    band_from_str,
    band_signature,
    band_to_str,
    count_gp,
    egp,
    gp_pairs,
    igp,
    scan,
    sieving_primes,
)
from gbcomet.formats import scan_to_csv
from tests.conftest import oracle_gp_count, trial_division_flags


class TestSievingPrimes:
    def test_examples(self):
        assert sieving_primes(80) == [2, 3, 5, 7]
        assert sieving_primes(4) == [2]
        assert sieving_primes(8) == [2]

    def test_invalid(self):
        with pytest.raises(ValueError):
            sieving_primes(81)
        with pytest.raises(ValueError):
            sieving_primes(2)


class TestBandSignature:
    @pytest.mark.parametrize("two_n,sig", [
        (80, (2, 5)),
        (30, (2, 3, 5)),
        (128, (2,)),
        (4, (2,)),
        (6, (2,)),
        (36, (2, 3)),
    ])
    def test_examples(self, two_n, sig):
        assert band_signature(two_n) == sig

    def test_string_round_trip(self):
        for sig in [(2,), (2, 3), (2, 5), (2, 3, 5, 7)]:
            assert band_from_str(band_to_str(sig)) == sig

    @pytest.mark.parametrize("text", ["", "3-2", "2-x", "-"])
    def test_bad_strings(self, text):
        with pytest.raises(ValueError):
            band_from_str(text)


class TestCountGp:
    def test_smallest(self, table_10k):
        assert count_gp(4, table_10k) == 1
        assert gp_pairs(4, table_10k) == [(2, 2)]

    def test_eighty(self, table_10k):
        assert count_gp(80, table_10k) == 4
        assert gp_pairs(80, table_10k) == [(7, 73), (13, 67), (19, 61), (37, 43)]

    def test_hundred(self, table_10k):
        assert count_gp(100, table_10k) == 6
        assert gp_pairs(100, table_10k) == [
            (3, 97), (11, 89), (17, 83), (29, 71), (41, 59), (47, 53)]

    def test_out_of_range(self, table_10k):
        with pytest.raises(OutOfRangeError):
            count_gp(10**4 + 2, table_10k)

    def test_odd(self, table_10k):
        with pytest.raises(ValueError):
            count_gp(99, table_10k)

    def test_unordered_symmetry(self, table_10k):
        # the k <= n count equals (ordered count + [n prime]) / 2
        flags = trial_division_flags(10**4)
        for two_n in range(4, 10**4 + 1, 2):
            a = np.flatnonzero(flags[2 : two_n - 1]) + 2
            ordered = int(flags[two_n - a].sum())
            n = two_n // 2
            assert count_gp(two_n, table_10k) == (ordered + int(flags[n])) // 2

    def test_racetrack_elimination(self, table_10k):
        # start from pairs (k, 2n-k), remove pairs with a nontrivial multiple
        # of a sieving prime, then the pair containing 1; the survivors are
        # exactly the Goldbach pairs
        for two_n in range(4, 10**4 + 1, 2):
            n = two_n // 2
            ntm = np.zeros(two_n, dtype=bool)  # index by member value 1..2n-1
            for p in sieving_primes(two_n):
                ntm[2 * p :: p] = True
            keep = 0
            for k in range(2, n + 1):
                if not ntm[k] and not ntm[two_n - k]:
                    keep += 1
            assert keep == count_gp(two_n, table_10k), two_n


class TestScan:
    def test_small_range(self, table_10k):
        records = scan(4, 10, table_10k)
        assert [r.two_n for r in records] == [4, 6, 8, 10]
        assert [r.gp_count for r in records] == [1, 1, 1, 2]

    def test_estimator_fields(self, table_10k):
        records = scan(4, 200, table_10k)
        for r in records[::7]:
            assert r.egp == pytest.approx(egp(r.two_n), rel=1e-12)
            assert r.igp == pytest.approx(igp(r.two_n), rel=1e-9)
            assert r.band == band_signature(r.two_n)

    def test_band_filter(self, table_10k):
        records = scan(4, 100, table_10k, band_filter={(2,)})
        evens = {r.two_n for r in records}
        assert {8, 16, 22, 32} <= evens
        assert 12 not in evens
        assert all(r.band == (2,) for r in records)

    def test_inverted_bounds(self, table_10k):
        with pytest.raises(OutOfRangeError):
            scan(10, 4, table_10k)

    def test_odd_bounds(self, table_10k):
        with pytest.raises(ValueError):
            scan(5, 10, table_10k)

    def test_beyond_table(self, table_10k):
        with pytest.raises(OutOfRangeError):
            scan(4, 10**4 + 2, table_10k)

    def test_worker_count_invisible(self, table_1m):
        # crosses several chunk boundaries
        a = scan(4, 10**5, table_1m, None, 1)
        b = scan(4, 10**5, table_1m, None, 2)
        assert scan_to_csv(a) == scan_to_csv(b)

    def test_band_partition(self, records_10k):
        flags = trial_division_flags(10**4)
        for r in records_10k[::11]:
            # band == (2,) iff no odd sieving prime divides
            divisors = [p for p in sieving_primes(r.two_n) if r.two_n % p == 0]
            assert r.band == tuple(divisors)
            has_odd = any(r.two_n % p == 0 for p in sieving_primes(r.two_n) if p > 2)
            assert (r.band == (2,)) == (not has_odd)

    def test_counts_match_oracle(self, records_10k):
        flags = trial_division_flags(10**4)
        rng = np.random.default_rng(3)
        for i in rng.integers(0, len(records_10k), size=60):
            r = records_10k[int(i)]
            assert r.gp_count == oracle_gp_count(r.two_n, flags)
