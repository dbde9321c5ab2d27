use franel_core::arith::{is_power_of_two, primes_up_to};
use franel_core::congruences::*;
use franel_core::{Integer, SequenceStore};

#[test]
fn alternating_sum_theorems_up_to_300() {
    let s = SequenceStore::new();
    for n in 1..=300u64 {
        let v = thm_alternating_sum(&s, n).unwrap();
        assert!(v.holds, "{v}");
        let refined = thm_refined(&s, n).unwrap();
        assert!(refined.holds, "{refined}");
        let expect = if is_power_of_two(n) { Integer::from(2 * n * n) } else { Integer::from(0) };
        assert_eq!(refined.lhs, expect);
        // the theorem implies the r = 3 conjecture instance
        assert!(conj1_check(&s, n, 3).unwrap().holds);
    }
}

#[test]
fn prime_power_results_up_to_150() {
    let s = SequenceStore::new();
    for p in primes_up_to(150).into_iter().filter(|&p| p > 3) {
        let mut vs = vec![
            thm_p5(&s, p).unwrap(),
            lemma_sun(&s, p).unwrap(),
            lemma_sunvar(&s, p).unwrap(),
            lemma_sun2(&s, p).unwrap(),
            lemma_fpmod(&s, p).unwrap(),
        ];
        vs.extend(verify_p5_decomposition(&s, p).unwrap());
        for v in vs {
            assert!(v.holds, "{v}");
        }
    }
}

#[test]
fn jarvis_verrill_and_sun_moments_up_to_100() {
    let s = SequenceStore::new();
    for p in primes_up_to(100).into_iter().filter(|&p| p > 2) {
        for n in 0..p {
            let v = jarvis_verrill(&s, p, n).unwrap();
            assert!(v.holds, "{v}");
        }
        if p > 3 {
            for moment in 0..=2 {
                let v = sun_intro(&s, p, moment).unwrap();
                assert!(v.holds, "{v}");
            }
        }
    }
}

#[test]
fn franel_mod4_up_to_4096() {
    let s = SequenceStore::new();
    for n in 1..=4096 {
        let v = franel_mod4(&s, n).unwrap();
        assert!(v.holds, "{v}");
    }
}

#[test]
fn divisibility_theorems() {
    let s = SequenceStore::new();
    for n in 1..=150 {
        for r in 0..=5 {
            let v = gz_congruence(&s, n, r).unwrap();
            assert!(v.holds, "{v}");
        }
    }
    for n in 1..=60 {
        for m in 1..=4 {
            for r in 1..=3 {
                let v = calkin_congruence(&s, n, m, r).unwrap();
                assert!(v.holds, "{v}");
            }
        }
    }
}

#[test]
fn proved_multinomial_cases_hold() {
    let s = SequenceStore::new();
    for m in 1..=6 {
        for r in 0..=5 {
            if !conj2_is_proved(m, r) {
                continue;
            }
            for n in 1..=60 {
                let v = conj2_check(&s, m, n, r).unwrap();
                assert!(v.holds, "{v}");
            }
        }
    }
}
