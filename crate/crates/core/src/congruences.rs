//! Residue checks for the congruences satisfied by Franel numbers and their
//! generalizations: proved theorems and lemmas, plus single instances of
//! the open conjectures.
//!
//! Every sum is formed exactly and reduced once at the end.

use num_traits::{One, Zero};

use crate::arith::{is_power_of_two, is_prime, legendre3, mod_inverse, primes_up_to, require_prime_above_3, Modulus};
use crate::error::{usage, Result};
use crate::identities::{alternating_franel_sum, int, mixed_square_sum, pow2, sign, triple_product_sum};
use crate::sequences::{Family, SequenceStore};
use crate::verdict::{CheckKind, Verdict};
use crate::{IntModulus, Integer, Scalar};

fn modulus(v: Integer) -> IntModulus {
    Modulus::new(v).expect("moduli built here are positive")
}

fn require_n_at_least(n: u64, min: u64) -> Result<()> {
    if n < min {
        return usage(format!("n must be at least {min}, got {n}"));
    }
    Ok(())
}

/// `sum_{k<n} s_k (a k + b) v_k` where `s_k = (-1)^k` if `alternating`, else 1.
fn weighted_sum(values: &[Integer], n: u64, a: u64, b: u64, alternating: bool) -> Integer {
    (0..n)
        .map(|k| {
            let w = int(a * k + b) * &values[k as usize];
            if alternating && k % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .sum()
}

/// `sum_{k<n} (3k+2)(-1)^k f_k ≡ 0 (mod 2n^2)`.
pub fn thm_alternating_sum(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    Ok(Verdict::congruence(
        "thm_alternating_sum",
        CheckKind::Theorem,
        &[("n", n as i64)],
        &alternating_franel_sum(store, n),
        &Integer::zero(),
        &modulus(int(2 * n * n)),
    ))
}

/// Refinement modulo `4n^2`: the residue is `2n^2` when `n` is a power of
/// two (including `n = 1`) and `0` otherwise.
pub fn thm_refined(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let expected = if is_power_of_two(n) { int(2 * n * n) } else { Integer::zero() };
    Ok(Verdict::congruence(
        "thm_refined",
        CheckKind::Theorem,
        &[("n", n as i64)],
        &alternating_franel_sum(store, n),
        &expected,
        &modulus(int(4 * n * n)),
    ))
}

/// `sum_{k<p} (3k+2)(-1)^k f_k ≡ 2p^2 (2^p - 1)^2 (mod p^5)`.
pub fn thm_p5(store: &SequenceStore, p: u64) -> Result<Verdict> {
    require_prime_above_3(p)?;
    let q = pow2(p) - 1;
    Ok(Verdict::congruence(
        "thm_p5",
        CheckKind::Theorem,
        &[("p", p as i64)],
        &alternating_franel_sum(store, p),
        &(int(2 * p * p) * &q * &q),
        &modulus(int(p).pow(5)),
    ))
}

/// The two steps reducing the mod `p^5` theorem to lemmas, each mod `p^3`,
/// with `T = S(p) / (2p^2)` (division asserted exact):
/// `T ≡ 2 sum C(p,k)C(p-1,k-1)^2 - 1` and
/// `T ≡ 2 sum C(p-1,k)C(p-1,k-1)^2 + 2 sum C(p-1,k-1)^3 - 1`, sums over `0 <= k <= p`.
pub fn verify_p5_decomposition(store: &SequenceStore, p: u64) -> Result<Vec<Verdict>> {
    require_prime_above_3(p)?;
    let t = alternating_franel_sum(store, p).exact_quotient(&int(2 * p * p));
    let m = modulus(int(p).pow(3));
    let first = mixed_square_sum(store, p) * 2 - 1;
    let (mut split, mut shifted_cubes) = (Integer::zero(), Integer::zero());
    for k in 0..=p as i64 {
        let lo = store.binomial(p - 1, k - 1);
        split += store.binomial(p - 1, k) * &lo * &lo;
        shifted_cubes += &lo * &lo * &lo;
    }
    let second = split * 2 + shifted_cubes * 2 - 1;
    let params: &[(&str, i64)] = &[("p", p as i64)];
    Ok(vec![
        Verdict::congruence("p5_decomposition_a", CheckKind::Lemma, params, &t, &first, &m),
        Verdict::congruence("p5_decomposition_b", CheckKind::Lemma, params, &t, &second, &m),
    ])
}

/// `f_{p-1} ≡ 1 + 3q + 3q^2 (mod p^3)`, `q = 2^(p-1) - 1`.
pub fn lemma_sun(store: &SequenceStore, p: u64) -> Result<Verdict> {
    require_prime_above_3(p)?;
    let q = pow2(p - 1) - 1;
    let rhs = Integer::one() + &q * 3 + &q * &q * 3;
    Ok(Verdict::congruence(
        "lemma_sun",
        CheckKind::Lemma,
        &[("p", p as i64)],
        &store.franel(p - 1),
        &rhs,
        &modulus(int(p).pow(3)),
    ))
}

/// `sum_{k=1}^{p-1} C(p-1,k) C(p-1,k-1)^2 ≡ 2^(p-1) - 2^(2p-2) (mod p^3)`.
pub fn lemma_sunvar(store: &SequenceStore, p: u64) -> Result<Verdict> {
    require_prime_above_3(p)?;
    let lhs: Integer = (1..p as i64)
        .map(|k| {
            let lo = store.binomial(p - 1, k - 1);
            store.binomial(p - 1, k) * &lo * lo
        })
        .sum();
    Ok(Verdict::congruence(
        "lemma_sunvar",
        CheckKind::Lemma,
        &[("p", p as i64)],
        &lhs,
        &(pow2(p - 1) - pow2(2 * p - 2)),
        &modulus(int(p).pow(3)),
    ))
}

/// `sum_{k=0}^{p} C(p,k) C(p-1,k) C(p-1,k-1) ≡ 2^p - 2^(2p-1) (mod p^3)`.
pub fn lemma_sun2(store: &SequenceStore, p: u64) -> Result<Verdict> {
    require_prime_above_3(p)?;
    Ok(Verdict::congruence(
        "lemma_sun2",
        CheckKind::Lemma,
        &[("p", p as i64)],
        &triple_product_sum(store, p),
        &(pow2(p) - pow2(2 * p - 1)),
        &modulus(int(p).pow(3)),
    ))
}

/// `f_p ≡ 2 (mod p^3)`.
pub fn lemma_fpmod(store: &SequenceStore, p: u64) -> Result<Verdict> {
    require_prime_above_3(p)?;
    Ok(Verdict::congruence(
        "lemma_fpmod",
        CheckKind::Lemma,
        &[("p", p as i64)],
        &store.franel(p),
        &int(2),
        &modulus(int(p).pow(3)),
    ))
}

/// `f_n ≡ (-8)^n f_{p-1-n} (mod p)` for an odd prime `p` and `0 <= n <= p-1`.
///
/// `p = 2` is rejected: there `f_0 = 1` but `f_1 = 2 ≡ 0`.
pub fn jarvis_verrill(store: &SequenceStore, p: u64, n: u64) -> Result<Verdict> {
    if p == 2 || !is_prime(p) {
        return usage(format!("expected an odd prime, got {p}"));
    }
    if n >= p {
        return usage(format!("need 0 <= n <= p-1, got n={n}, p={p}"));
    }
    let rhs = Integer::from(-8).pow(n as u32) * store.franel(p - 1 - n);
    Ok(Verdict::congruence(
        "jarvis_verrill",
        CheckKind::Theorem,
        &[("n", n as i64), ("p", p as i64)],
        &store.franel(n),
        &rhs,
        &modulus(int(p)),
    ))
}

/// `sum_{k<p} (-1)^k k^j f_k (mod p^2)` against `(p/3)`, `-(2/3)(p/3)` and
/// `(10/27)(p/3)` for `j = 0, 1, 2`; fractions are read through inverses mod `p^2`.
pub fn sun_intro(store: &SequenceStore, p: u64, moment: u32) -> Result<Verdict> {
    let symbol = Integer::from(legendre3(p)?);
    let m = modulus(int(p * p));
    let coeff = match moment {
        0 => Integer::one(),
        1 => Integer::from(-2) * mod_inverse(&int(3), &m)?,
        2 => Integer::from(10) * mod_inverse(&int(27), &m)?,
        _ => return usage(format!("moment must be 0, 1 or 2, got {moment}")),
    };
    let f = store.values(Family::Franel, p as usize);
    let lhs: Integer = (0..p)
        .map(|k| sign(k) * Integer::from(k).pow(moment) * &f[k as usize])
        .sum();
    Ok(Verdict::congruence(
        "sun_intro",
        CheckKind::Theorem,
        &[("moment", moment as i64), ("p", p as i64)],
        &lhs,
        &(coeff * symbol),
        &m,
    ))
}

/// For `n >= 1`: `f_n ≡ 2 (mod 4)` if `n` is a power of two, else `f_n ≡ 0`.
pub fn franel_mod4(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let expected = if is_power_of_two(n) { 2 } else { 0 };
    Ok(Verdict::congruence(
        "franel_mod4",
        CheckKind::Theorem,
        &[("n", n as i64)],
        &store.franel(n),
        &int(expected),
        &modulus(int(4)),
    ))
}

/// `f_n^(2r) ≡ 0 (mod n+1)`.
pub fn gz_congruence(store: &SequenceStore, n: u64, r: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    Ok(Verdict::congruence(
        "gz_congruence",
        CheckKind::Theorem,
        &[("n", n as i64), ("r", r as i64)],
        &store.power_sum(n, 2 * r),
        &Integer::zero(),
        &modulus(int(n + 1)),
    ))
}

/// Primes `p` with `n/m < p < (n+1)/m + (n+1-m)/(m(2mr-1))`, tested by
/// cross-multiplication.
pub fn calkin_primes(n: u64, m: u64, r: u64) -> Vec<u64> {
    let d = (2 * m * r - 1) as i128;
    let (n, m) = (n as i128, m as i128);
    // p m d < (n+1) d + (n+1-m)
    let upper = (n + 1) * d + (n + 1 - m);
    primes_up_to(2 * n as u64 + 2)
        .into_iter()
        .filter(|&p| {
            let p = p as i128;
            p * m > n && p * m * d < upper
        })
        .collect()
}

/// `f_n^(2r) ≡ 0 (mod p)` for every prime in the Calkin window. Checked
/// against the product of those primes; an empty window is a vacuous pass.
pub fn calkin_congruence(store: &SequenceStore, n: u64, m: u64, r: u64) -> Result<Verdict> {
    if n == 0 || m == 0 || r == 0 {
        return usage(format!("need n, m, r >= 1, got n={n}, m={m}, r={r}"));
    }
    let primes = calkin_primes(n, m, r);
    let product: Integer = primes.iter().map(|&p| int(p)).product();
    let mut v = Verdict::congruence(
        "calkin_congruence",
        CheckKind::Theorem,
        &[("m", m as i64), ("n", n as i64), ("primes", primes.len() as i64), ("r", r as i64)],
        &store.power_sum(n, 2 * r),
        &Integer::zero(),
        &modulus(product),
    );
    v.vacuous = primes.is_empty();
    Ok(v)
}

/// `sum_{k<n} (-1)^(rk) (3k+2) f_k^(r)`.
pub fn conj1_sum(store: &SequenceStore, n: u64, r: u64) -> Integer {
    let f = store.values(Family::PowerSum { r }, n as usize);
    weighted_sum(&f, n, 3, 2, r % 2 == 1)
}

/// Conjecture instance: `sum_{k<n} (-1)^(rk) (3k+2) f_k^(r) ≡ 0 (mod 2n)`.
pub fn conj1_check(store: &SequenceStore, n: u64, r: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    Ok(Verdict::congruence(
        "conj1",
        CheckKind::Conjecture,
        &[("n", n as i64), ("r", r as i64)],
        &conj1_sum(store, n, r),
        &Integer::zero(),
        &modulus(int(2 * n)),
    ))
}

/// Conjecture instance, odd powers: `sum_{k<n} (-1)^k (3k+2) f_k^(2r+1) ≡ 0 (mod 4n)`, `n >= 2`.
pub fn conj1_odd_strong(store: &SequenceStore, n: u64, r: u64) -> Result<Verdict> {
    require_n_at_least(n, 2)?;
    Ok(Verdict::congruence(
        "conj1_odd",
        CheckKind::Conjecture,
        &[("n", n as i64), ("r", r as i64)],
        &conj1_sum(store, n, 2 * r + 1),
        &Integer::zero(),
        &modulus(int(4 * n)),
    ))
}

/// Conjectured consequence, even powers: `sum_{k<n} (3k+2) f_k^(2r) ≡ 0 (mod n(n+1))`.
pub fn conj1_even_combined(store: &SequenceStore, n: u64, r: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    if r == 0 {
        return usage("r must be at least 1");
    }
    Ok(Verdict::congruence(
        "conj1_even",
        CheckKind::Conjecture,
        &[("n", n as i64), ("r", r as i64)],
        &conj1_sum(store, n, 2 * r),
        &Integer::zero(),
        &modulus(int(n * (n + 1))),
    ))
}

/// `sum_{k<n} (-1)^(rk) ((m+1)k + m) M_{m,k}^(r)`.
pub fn conj2_sum(store: &SequenceStore, m: u64, n: u64, r: u64) -> Integer {
    let t = store.values(Family::Multinomial { m, r }, n as usize);
    weighted_sum(&t, n, m + 1, m, r % 2 == 1)
}

/// Conjecture instance: `sum_{k<n} (-1)^(rk) ((m+1)k+m) M_{m,k}^(r) ≡ 0 (mod mn)`.
pub fn conj2_check(store: &SequenceStore, m: u64, n: u64, r: u64) -> Result<Verdict> {
    if m == 0 {
        return usage("m must be at least 1");
    }
    require_n_at_least(n, 1)?;
    Ok(Verdict::congruence(
        "conj2",
        CheckKind::Conjecture,
        &[("m", m as i64), ("n", n as i64), ("r", r as i64)],
        &conj2_sum(store, m, n, r),
        &Integer::zero(),
        &modulus(int(m * n)),
    ))
}

/// `(m, r)` pairs for which the multinomial congruence is a theorem.
pub fn conj2_is_proved(m: u64, r: u64) -> bool {
    matches!((m, r), (_, 0) | (_, 1) | (1, _) | (2, 2) | (2, 3) | (3, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> Integer {
        Integer::from(v)
    }

    fn check(v: Verdict, lhs: i64, rhs: i64) {
        assert!(v.holds, "{v}");
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (i(lhs), i(rhs)), "{v}");
    }

    #[test]
    fn alternating_theorem_examples() {
        let s = SequenceStore::new();
        assert_eq!(alternating_franel_sum(&s, 3), i(72));
        assert_eq!(alternating_franel_sum(&s, 4), i(-544));
        check(thm_alternating_sum(&s, 3).unwrap(), 0, 0);
        check(thm_alternating_sum(&s, 1).unwrap(), 0, 0);
        check(thm_alternating_sum(&s, 4).unwrap(), 0, 0);
        check(thm_refined(&s, 2).unwrap(), 8, 8);
        check(thm_refined(&s, 5).unwrap(), 0, 0);
        check(thm_refined(&s, 1).unwrap(), 2, 2);
        assert!(thm_alternating_sum(&s, 0).is_err());
    }

    #[test]
    fn p5_examples() {
        let s = SequenceStore::new();
        check(thm_p5(&s, 5).unwrap(), 1175, 1175);
        assert!(thm_p5(&s, 7).unwrap().holds);
        assert!(thm_p5(&s, 11).unwrap().holds);
        assert!(thm_p5(&s, 3).is_err());
        assert!(thm_p5(&s, 9).is_err());
        let d = verify_p5_decomposition(&s, 5).unwrap();
        check(d[0].clone(), 86, 86);
        check(d[1].clone(), 86, 86);
        for p in [7, 11] {
            assert!(verify_p5_decomposition(&s, p).unwrap().iter().all(|v| v.holds));
        }
    }

    #[test]
    fn lemma_examples() {
        let s = SequenceStore::new();
        check(lemma_sun(&s, 5).unwrap(), 96, 96);
        check(lemma_sunvar(&s, 5).unwrap(), 10, 10);
        check(lemma_sun2(&s, 5).unwrap(), 20, 20);
        check(lemma_fpmod(&s, 5).unwrap(), 2, 2);
        for p in [7, 11, 13] {
            assert!(lemma_sun(&s, p).unwrap().holds);
            assert!(lemma_sunvar(&s, p).unwrap().holds);
            assert!(lemma_sun2(&s, p).unwrap().holds);
            assert!(lemma_fpmod(&s, p).unwrap().holds);
        }
    }

    #[test]
    fn jarvis_verrill_examples() {
        let s = SequenceStore::new();
        check(jarvis_verrill(&s, 5, 1).unwrap(), 2, 2);
        check(jarvis_verrill(&s, 7, 2).unwrap(), 3, 3);
        check(jarvis_verrill(&s, 5, 0).unwrap(), 1, 1);
        assert!(jarvis_verrill(&s, 5, 5).is_err());
        assert!(jarvis_verrill(&s, 6, 1).is_err());
        assert!(jarvis_verrill(&s, 2, 1).is_err());
        assert!(jarvis_verrill(&s, 3, 1).unwrap().holds);
    }

    #[test]
    fn sun_intro_examples() {
        let s = SequenceStore::new();
        check(sun_intro(&s, 5, 0).unwrap(), 24, 24);
        check(sun_intro(&s, 5, 1).unwrap(), 9, 9);
        check(sun_intro(&s, 5, 2).unwrap(), 20, 20);
        let v = sun_intro(&s, 5, 2).unwrap();
        assert_eq!(v.balanced().unwrap().1, i(-5));
        assert!(sun_intro(&s, 5, 3).is_err());
        assert!(sun_intro(&s, 3, 0).is_err());
    }

    #[test]
    fn mod4_examples() {
        let s = SequenceStore::new();
        check(franel_mod4(&s, 4).unwrap(), 2, 2);
        check(franel_mod4(&s, 3).unwrap(), 0, 0);
        check(franel_mod4(&s, 6).unwrap(), 0, 0);
        check(franel_mod4(&s, 1).unwrap(), 2, 2);
    }

    #[test]
    fn gz_examples() {
        let s = SequenceStore::new();
        assert_eq!(s.power_sum(3, 4), i(164));
        check(gz_congruence(&s, 3, 2).unwrap(), 0, 0);
        check(gz_congruence(&s, 4, 1).unwrap(), 0, 0);
        check(gz_congruence(&s, 1, 3).unwrap(), 0, 0);
    }

    #[test]
    fn calkin_examples() {
        let s = SequenceStore::new();
        assert_eq!(calkin_primes(4, 1, 1), vec![5, 7]);
        assert_eq!(calkin_primes(2, 1, 1), vec![3]);
        assert_eq!(calkin_primes(1, 1, 1), vec![2]);
        let v = calkin_congruence(&s, 4, 1, 1).unwrap();
        assert!(v.holds && !v.vacuous);
        assert_eq!(v.modulus, Some(i(35)));
        assert!(calkin_congruence(&s, 2, 1, 1).unwrap().holds);
        assert!(calkin_congruence(&s, 1, 1, 1).unwrap().holds);
        // window (1/4, 2/4 + 0) holds no primes
        let v = calkin_congruence(&s, 1, 4, 1).unwrap();
        assert!(v.holds && v.vacuous);
    }

    #[test]
    fn calkin_windows_match_fraction_oracle() {
        // frozen from an exact rational-arithmetic enumeration
        let cases: &[(u64, u64, u64, &[u64])] = &[
            (10, 1, 1, &[11, 13, 17, 19]),
            (10, 2, 1, &[]),
            (30, 3, 2, &[11]),
            (59, 4, 3, &[]),
            (20, 1, 3, &[23]),
            (7, 2, 2, &[]),
        ];
        for &(n, m, r, expect) in cases {
            assert_eq!(calkin_primes(n, m, r), expect, "n={n} m={m} r={r}");
        }
    }

    #[test]
    fn conjecture_examples() {
        let s = SequenceStore::new();
        assert_eq!(conj1_sum(&s, 3, 4), i(156));
        check(conj1_check(&s, 3, 4).unwrap(), 0, 0);
        for r in 0..8 {
            check(conj1_check(&s, 1, r).unwrap(), 0, 0);
        }
        assert_eq!(conj1_sum(&s, 4, 6), i(16600));
        assert!(conj1_check(&s, 4, 6).unwrap().holds);
        assert_eq!(conj1_sum(&s, 2, 5), i(-8));
        assert_eq!(conj1_sum(&s, 3, 5), i(264));
        assert!(conj1_odd_strong(&s, 2, 2).unwrap().holds);
        assert!(conj1_odd_strong(&s, 3, 2).unwrap().holds);
        assert!(conj1_odd_strong(&s, 4, 1).unwrap().holds);
        assert_eq!(conj1_sum(&s, 4, 3), i(-544));
        assert!(conj1_odd_strong(&s, 1, 1).is_err());
        assert_eq!(conj1_sum(&s, 3, 6), i(540));
        assert!(conj1_even_combined(&s, 3, 3).unwrap().holds);
        assert!(conj1_even_combined(&s, 4, 3).unwrap().holds);
        assert!(conj1_even_combined(&s, 1, 1).unwrap().holds);
        assert!(conj1_even_combined(&s, 1, 0).is_err());
        assert_eq!(conj2_sum(&s, 3, 2, 2), i(24));
        assert!(conj2_check(&s, 3, 2, 2).unwrap().holds);
        assert_eq!(conj2_sum(&s, 1, 5, 2), i(25));
        assert!(conj2_check(&s, 1, 5, 2).unwrap().holds);
        assert_eq!(conj2_sum(&s, 2, 4, 3), i(-544));
        assert!(conj2_check(&s, 2, 4, 3).unwrap().holds);
    }

    #[test]
    fn proved_pairs() {
        assert!(conj2_is_proved(7, 0) && conj2_is_proved(7, 1) && conj2_is_proved(1, 9));
        assert!(conj2_is_proved(2, 3) && conj2_is_proved(3, 2));
        assert!(!conj2_is_proved(2, 4) && !conj2_is_proved(4, 2));
    }
}
