//! Exact integer-equality checks for the binomial-sum identities around
//! Franel numbers. Fractions appearing in the original statements are
//! cleared so every comparison stays in the integers.

use num_traits::{One, Zero};

use crate::error::{usage, Result};
use crate::poly::{foata_lhs, foata_rhs};
use crate::sequences::{Family, SequenceStore};
use crate::verdict::{CheckKind, Verdict};
use crate::{Integer, Scalar};

const KIND: CheckKind = CheckKind::Identity;

pub(crate) fn int(v: u64) -> Integer {
    Integer::from(v)
}

pub(crate) fn pow2(e: u64) -> Integer {
    Integer::one() << e
}

pub(crate) fn sign(e: u64) -> Integer {
    Integer::sign_pow(e)
}

fn cube(x: Integer) -> Integer {
    &x * &x * x
}

fn require_n_at_least(n: u64, min: u64) -> Result<()> {
    if n < min {
        return usage(format!("n must be at least {min}, got {n}"));
    }
    Ok(())
}

/// `C(n+k,3k) C(3k,2k) C(2k,k)`, read from the shared triangle.
fn macmahon_coeff(store: &SequenceStore, n: u64, k: u64) -> Integer {
    store.binomial(n + k, 3 * k as i64)
        * store.binomial(3 * k, 2 * k as i64)
        * store.binomial(2 * k, k as i64)
}

/// `C(2k,k) / (k+1)`, asserting exact divisibility.
pub fn catalan(store: &SequenceStore, k: u64) -> Integer {
    store.binomial(2 * k, k as i64).exact_quotient(&int(k + 1))
}

/// `sum_{k<n} (3k+2) (-1)^k f_k`.
pub fn alternating_franel_sum(store: &SequenceStore, n: u64) -> Integer {
    let f = store.values(Family::Franel, n as usize);
    (0..n).map(|k| sign(k) * int(3 * k + 2) * &f[k as usize]).sum()
}

/// `sum_k C(n,k)^3 x^k` equals `sum_k C(n+k,3k)C(3k,2k)C(2k,k) x^k (1+x)^(n-2k)`
/// coefficient by coefficient. The reported sides are both polynomials
/// evaluated at `x = 2`.
pub fn verify_foata(n: u64) -> Verdict {
    let lhs = foata_lhs::<Integer>(n);
    let rhs = foata_rhs::<Integer>(n);
    let x = int(2);
    let mut v = Verdict::exact("foata", KIND, &[("n", n as i64), ("eval_at", 2)], lhs.eval(&x), rhs.eval(&x));
    v.holds = lhs == rhs;
    v
}

/// `f_n = sum_{k<=n/2} C(n+k,3k)C(3k,2k)C(2k,k) 2^(n-2k)`.
pub fn verify_mac(store: &SequenceStore, n: u64) -> Verdict {
    let rhs = (0..=n / 2).map(|k| macmahon_coeff(store, n, k) * pow2(n - 2 * k)).sum();
    Verdict::exact("mac", KIND, &[("n", n as i64)], store.franel(n), rhs)
}

/// Second-derivative form, multiplied through by 4:
/// `4 sum_k C(n,k)^3 k(k-1) = sum_k 2^(n-2k) C(n+k,3k)C(3k,2k)C(2k,k) (n(n-1)-2k)`.
pub fn verify_mac2(store: &SequenceStore, n: u64) -> Verdict {
    let lhs: Integer = (0..=n)
        .map(|k| cube(store.binomial(n, k as i64)) * int(k * k.saturating_sub(1)))
        .sum::<Integer>()
        * 4;
    let nn = Integer::from(n) * Integer::from(n.saturating_sub(1));
    let rhs = (0..=n / 2)
        .map(|k| pow2(n - 2 * k) * macmahon_coeff(store, n, k) * (&nn - int(2 * k)))
        .sum();
    Verdict::exact("mac2", KIND, &[("n", n as i64)], lhs, rhs)
}

/// `sum_{l=2k}^{n-1} (-1)^l (3l+2) C(l+k,3k) 2^(l-2k) = (-1)^(n-1) (n-2k) C(n+k,3k) 2^(n-2k)`.
pub fn verify_induc(store: &SequenceStore, n: u64, k: u64) -> Result<Verdict> {
    if 2 * k > n {
        return usage(format!("need 2k <= n, got n={n}, k={k}"));
    }
    let lhs = (2 * k..n)
        .map(|l| sign(l) * int(3 * l + 2) * store.binomial(l + k, 3 * k as i64) * pow2(l - 2 * k))
        .sum();
    // (-1)^(n-1) = -(-1)^n also covers n = 0
    let rhs = -sign(n) * int(n - 2 * k) * store.binomial(n + k, 3 * k as i64) * pow2(n - 2 * k);
    Ok(Verdict::exact("induc", KIND, &[("k", k as i64), ("n", n as i64)], lhs, rhs))
}

/// The alternating weighted Franel sum equals
/// `(-1)^(n-1) sum_{k<n} 2^(n-2k) (n-2k) C(n+k,3k)C(3k,2k)C(2k,k)`.
pub fn verify_sum1(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let inner: Integer = (0..n)
        .filter(|k| 2 * k <= n)
        .map(|k| pow2(n - 2 * k) * int(n - 2 * k) * macmahon_coeff(store, n, k))
        .sum();
    Ok(Verdict::exact(
        "sum1",
        KIND,
        &[("n", n as i64)],
        alternating_franel_sum(store, n),
        sign(n - 1) * inner,
    ))
}

/// `sum_k C(n,k) C(n-1,k-1)^2`.
pub fn mixed_square_sum(store: &SequenceStore, n: u64) -> Integer {
    (0..=n as i64)
        .map(|k| {
            let b = store.binomial(n - 1, k - 1);
            store.binomial(n, k) * &b * b
        })
        .sum()
}

/// Cleared form:
/// `S(n) = 2n^2 [ (-1)^(n-1) 2 sum_k C(n,k)C(n-1,k-1)^2 + (-1)^n f_n/2 ]`.
///
/// Panics if `f_n` is odd, which cannot happen for `n >= 1`.
pub fn verify_sum2(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let half_f = store.franel(n).exact_quotient(&int(2));
    let bracket = sign(n - 1) * 2 * mixed_square_sum(store, n) + sign(n) * half_f;
    let rhs = int(2 * n * n) * bracket;
    Ok(Verdict::exact("sum2", KIND, &[("n", n as i64)], alternating_franel_sum(store, n), rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strehl {
    /// `f_n = sum_k C(n,k)^2 C(2k,n)`.
    First,
    /// `sum_k C(n,k)^2 C(n+k,k)^2 = sum_k sum_j C(n,k) C(n+k,k) C(k,j)^3`.
    Second,
}

impl TryFrom<u8> for Strehl {
    type Error = crate::Error;

    fn try_from(which: u8) -> Result<Self> {
        match which {
            1 => Ok(Self::First),
            2 => Ok(Self::Second),
            _ => usage(format!("Strehl identity must be 1 or 2, got {which}")),
        }
    }
}

pub fn verify_strehl(store: &SequenceStore, n: u64, which: Strehl) -> Verdict {
    let params: &[(&str, i64)] = &[("n", n as i64)];
    match which {
        Strehl::First => {
            let rhs = (0..=n as i64)
                .map(|k| {
                    let b = store.binomial(n, k);
                    &b * &b * store.binomial(2 * k as u64, n as i64)
                })
                .sum();
            Verdict::exact("strehl1", KIND, params, store.franel(n), rhs)
        }
        Strehl::Second => {
            let mut lhs = Integer::zero();
            let mut rhs = Integer::zero();
            for k in 0..=n {
                let a = store.binomial(n, k as i64) * store.binomial(n + k, k as i64);
                lhs += &a * &a;
                rhs += a * store.power_sum(k, 3);
            }
            Verdict::exact("strehl2", KIND, params, lhs, rhs)
        }
    }
}

/// Closed forms for `r = 0, 1, 2`, each summed from the actual power-sum
/// sequence: `sum (3k+2) f^(0)_k = n^3+n^2`,
/// `sum (-1)^k (3k+2) f^(1)_k = (-1)^(n-1) 2^n n`,
/// `sum (3k+2) f^(2)_k = n C(2n,n)`.
pub fn verify_closed_forms(store: &SequenceStore, n: u64) -> Result<Vec<Verdict>> {
    require_n_at_least(n, 1)?;
    let params: &[(&str, i64)] = &[("n", n as i64)];
    let weighted = |r: u64, alternating: bool| -> Integer {
        let f = store.values(Family::PowerSum { r }, n as usize);
        (0..n)
            .map(|k| {
                let s = if alternating { sign(k) } else { Integer::one() };
                s * int(3 * k + 2) * &f[k as usize]
            })
            .sum()
    };
    Ok(vec![
        Verdict::exact("closed_form_f0", KIND, params, weighted(0, false), int(n * n * n + n * n)),
        Verdict::exact("closed_form_f1", KIND, params, weighted(1, true), sign(n - 1) * pow2(n) * int(n)),
        Verdict::exact(
            "closed_form_f2",
            KIND,
            params,
            weighted(2, false),
            int(n) * store.binomial(2 * n, n as i64),
        ),
    ])
}

/// The four induction identities for multinomial power sums with
/// `r in {0, 1}` or `m = 1`.
pub fn verify_mnr_identities(store: &SequenceStore, m: u64, n: u64, r: u64) -> Result<Vec<Verdict>> {
    if m == 0 {
        return usage("m must be at least 1");
    }
    require_n_at_least(n, 1)?;
    let params: &[(&str, i64)] = &[("m", m as i64), ("n", n as i64), ("r", r as i64)];
    let weighted = |parts: u64, power: u64, a: u64, b: u64, alternating: bool| -> Integer {
        let t = store.values(Family::Multinomial { m: parts, r: power }, n as usize);
        (0..n)
            .map(|k| {
                let s = if alternating { sign(k) } else { Integer::one() };
                s * int(a * k + b) * &t[k as usize]
            })
            .sum()
    };
    Ok(vec![
        Verdict::exact(
            "mnr1",
            KIND,
            params,
            weighted(m, 0, m + 1, m, false),
            int(m * n) * store.binomial(m + n - 1, m as i64),
        ),
        Verdict::exact(
            "mnr2",
            KIND,
            params,
            weighted(m, 1, m + 1, m, true),
            sign(n - 1) * Integer::from(m).pow(n as u32) * int(n),
        ),
        Verdict::exact("mnr3", KIND, params, weighted(1, 2 * r, 2, 1, false), int(n * n)),
        Verdict::exact("mnr4", KIND, params, weighted(1, 2 * r + 1, 2, 1, true), sign(n - 1) * int(n)),
    ])
}

/// `sum_{k<n} (4k+3) M_{3,k}^(2) = 3n^2 sum_{k<n} Catalan(k) C(n-1,k)^2`.
pub fn verify_sunmk3(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let m3 = store.values(Family::Multinomial { m: 3, r: 2 }, n as usize);
    let lhs = (0..n).map(|k| int(4 * k + 3) * &m3[k as usize]).sum();
    let inner: Integer = (0..n)
        .map(|k| {
            let b = store.binomial(n - 1, k as i64);
            catalan(store, k) * &b * b
        })
        .sum();
    Ok(Verdict::exact("sunmk3", KIND, &[("n", n as i64)], lhs, int(3 * n * n) * inner))
}

/// `sum_k C(n,k) C(n-1,k) C(n-1,k-1)`.
pub fn triple_product_sum(store: &SequenceStore, n: u64) -> Integer {
    (0..=n as i64)
        .map(|k| store.binomial(n, k) * store.binomial(n - 1, k) * store.binomial(n - 1, k - 1))
        .sum()
}

/// Cubing Pascal's rule:
/// `sum C(n-1,k)^3 = sum C(n,k)^3 - sum C(n-1,k-1)^3 - 3 sum C(n,k)C(n-1,k)C(n-1,k-1)`,
/// all sums over `0 <= k <= n`.
pub fn verify_cube_split(store: &SequenceStore, n: u64) -> Result<Verdict> {
    require_n_at_least(n, 1)?;
    let cube_sum = |row: u64, shift: i64| -> Integer {
        (0..=n as i64).map(|k| cube(store.binomial(row, k - shift))).sum()
    };
    let lhs = cube_sum(n - 1, 0);
    let rhs = cube_sum(n, 0) - cube_sum(n - 1, 1) - triple_product_sum(store, n) * 3;
    Ok(Verdict::exact("cube_split", KIND, &[("n", n as i64)], lhs, rhs))
}

/// Reflection `k -> n-k` on row `n-1`. Two verdicts:
/// `sum C(n-1,k)C(n-1,k-1)^2 = sum C(n-1,k)^2 C(n-1,k-1)` (over `1 <= k <= n-1`), and
/// twice that sum equals `sum_{k=0}^{n} C(n,k)C(n-1,k)C(n-1,k-1)`.
pub fn verify_half_symmetry(store: &SequenceStore, n: u64) -> Result<Vec<Verdict>> {
    require_n_at_least(n, 1)?;
    let (mut a, mut b) = (Integer::zero(), Integer::zero());
    for k in 1..n as i64 {
        let hi = store.binomial(n - 1, k);
        let lo = store.binomial(n - 1, k - 1);
        a += &hi * &lo * &lo;
        b += &hi * &hi * &lo;
    }
    let params: &[(&str, i64)] = &[("n", n as i64)];
    Ok(vec![
        Verdict::exact("half_symmetry_swap", KIND, params, a.clone(), b),
        Verdict::exact("half_symmetry_double", KIND, params, a * 2, triple_product_sum(store, n)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> Integer {
        Integer::from(v)
    }

    fn assert_holds(v: &Verdict, lhs: i64) {
        assert!(v.holds, "{v}");
        assert_eq!(v.lhs, i(lhs), "{v}");
    }

    #[test]
    fn foata_examples() {
        for n in [0, 2, 7] {
            assert!(verify_foata(n).holds, "n={n}");
        }
        assert_eq!(verify_foata(2).lhs, i(1 + 16 + 4));
    }

    #[test]
    fn mac_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_mac(&s, 3), 56);
        assert_holds(&verify_mac(&s, 0), 1);
        assert_holds(&verify_mac(&s, 4), 346);
        assert_holds(&verify_mac2(&s, 3), 240);
        assert_holds(&verify_mac2(&s, 1), 0);
        assert_holds(&verify_mac2(&s, 0), 0);
        assert!(verify_mac2(&s, 6).holds);
    }

    #[test]
    fn induc_examples() {
        let s = SequenceStore::new();
        for k in 0..5 {
            assert_holds(&verify_induc(&s, 2 * k, k).unwrap(), 0);
        }
        assert_holds(&verify_induc(&s, 3, 1).unwrap(), 8);
        assert_holds(&verify_induc(&s, 2, 0).unwrap(), -8);
        assert!(verify_induc(&s, 3, 2).is_err());
    }

    #[test]
    fn sum_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_sum1(&s, 2).unwrap(), -8);
        assert_holds(&verify_sum1(&s, 1).unwrap(), 2);
        assert_holds(&verify_sum1(&s, 5).unwrap(), 4300);
        assert_holds(&verify_sum2(&s, 2).unwrap(), -8);
        assert_holds(&verify_sum2(&s, 1).unwrap(), 2);
        assert_holds(&verify_sum2(&s, 5).unwrap(), 4300);
        assert_eq!(mixed_square_sum(&s, 2), i(3));
        assert_eq!(mixed_square_sum(&s, 5), i(606));
        assert!(verify_sum1(&s, 0).is_err());
    }

    #[test]
    fn strehl_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_strehl(&s, 3, Strehl::First), 56);
        assert_holds(&verify_strehl(&s, 0, Strehl::Second), 1);
        assert_holds(&verify_strehl(&s, 2, Strehl::Second), 73);
        assert!(Strehl::try_from(3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let s = SequenceStore::new();
        let v = verify_closed_forms(&s, 2).unwrap();
        assert_holds(&v[1], -8);
        assert_holds(&v[2], 12);
        let v = verify_closed_forms(&s, 1).unwrap();
        assert_holds(&v[0], 2);
    }

    #[test]
    fn mnr_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_mnr_identities(&s, 2, 2, 0).unwrap()[0], 12);
        assert_holds(&verify_mnr_identities(&s, 3, 2, 0).unwrap()[1], -18);
        for m in 1..4 {
            assert_holds(&verify_mnr_identities(&s, m, 3, 1).unwrap()[2], 9);
            assert_holds(&verify_mnr_identities(&s, m, 3, 1).unwrap()[3], 3);
        }
    }

    #[test]
    fn sunmk3_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_sunmk3(&s, 1).unwrap(), 3);
        assert_holds(&verify_sunmk3(&s, 2).unwrap(), 24);
        assert_holds(&verify_sunmk3(&s, 4).unwrap(), 1584);
    }

    #[test]
    fn cube_split_and_symmetry_examples() {
        let s = SequenceStore::new();
        assert_holds(&verify_cube_split(&s, 5).unwrap(), 346);
        assert_eq!(triple_product_sum(&s, 5), i(520));
        assert_holds(&verify_cube_split(&s, 1).unwrap(), 1);
        assert!(verify_cube_split(&s, 8).unwrap().holds);
        let v = verify_half_symmetry(&s, 5).unwrap();
        assert_holds(&v[0], 260);
        assert_holds(&v[1], 520);
        let v = verify_half_symmetry(&s, 1).unwrap();
        assert_holds(&v[0], 0);
        assert_holds(&v[1], 0);
        assert!(verify_half_symmetry(&s, 9).unwrap().iter().all(|v| v.holds));
    }

    #[test]
    fn catalan_is_integral() {
        let s = SequenceStore::new();
        for k in 0..=500 {
            let c = catalan(&s, k);
            assert_eq!(c * int(k + 1), s.binomial(2 * k, k as i64));
        }
    }
}
