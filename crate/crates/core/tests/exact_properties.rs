use proptest::collection::vec;
use proptest::prelude::*;
use weda_core::exact::{bicriteria_exact, eda_banded, eda_exact_with_script, eda_waves, EdaOutcome};
use weda_core::oracle::{oracle_bicriteria, oracle_eda, hamming};
use weda_core::{ByteText, Threshold};

fn textbook_levenshtein(x: &[u8], y: &[u8]) -> u64 {
    let mut prev: Vec<u64> = (0..=y.len() as u64).collect();
    for (i, &c) in x.iter().enumerate() {
        let mut cur = vec![i as u64 + 1];
        for (j, &d) in y.iter().enumerate() {
            let v = (prev[j] + u64::from(c != d)).min(prev[j + 1] + 1).min(cur[j] + 1);
            cur.push(v);
        }
        prev = cur;
    }
    prev[y.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn both_paths_match_oracle(
        x in vec(0u8..3, 0..40),
        y in vec(0u8..3, 0..40),
        a in 1u64..9,
        slack in 0u64..20,
    ) {
        let v = oracle_eda(&x, &y, a).unwrap().units;
        let (bx, by) = (ByteText::new(x.clone()), ByteText::new(y.clone()));
        for t in [v.saturating_sub(slack), v, v + slack] {
            let k = Threshold::from_units(t, a);
            let want = if v <= t { Some(v) } else { None };
            prop_assert_eq!(eda_waves(&bx, &by, &k).units(), want);
            prop_assert_eq!(eda_banded(&bx, &by, &k).units(), want);
        }
    }

    #[test]
    fn scripts_realize_the_distance(x in vec(0u8..4, 0..30), y in vec(0u8..4, 0..30), a in 1u64..6) {
        let v = oracle_eda(&x, &y, a).unwrap().units;
        let (bx, by) = (ByteText::new(x.clone()), ByteText::new(y.clone()));
        let (out, script) = eda_exact_with_script(&bx, &by, &Threshold::from_units(v, a)).unwrap();
        prop_assert_eq!(out.units(), Some(v));
        let script = script.unwrap();
        prop_assert_eq!(script.cost_units(a), v);
        prop_assert_eq!(script.apply(&x).unwrap(), y);
    }

    #[test]
    fn bicriteria_matches_oracle(
        x in vec(0u8..2, 0..25),
        y in vec(0u8..2, 0..25),
        ki in 0usize..5,
        ks in 0usize..10,
    ) {
        let want = oracle_bicriteria(&x, &y, ki, ks).unwrap();
        prop_assert_eq!(bicriteria_exact(&ByteText::new(x), &ByteText::new(y), ki, ks), want);
    }

    #[test]
    fn oracle_is_a_metric(
        x in vec(0u8..3, 0..15),
        y in vec(0u8..3, 0..15),
        z in vec(0u8..3, 0..15),
        a in 1u64..6,
    ) {
        let d = |p: &[u8], q: &[u8]| oracle_eda(p, q, a).unwrap().units;
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
        prop_assert_eq!(d(&x, &x), 0);
    }

    #[test]
    fn unit_weight_is_levenshtein(x in vec(0u8..4, 0..30), y in vec(0u8..4, 0..30)) {
        prop_assert_eq!(oracle_eda(&x, &y, 1).unwrap().units, textbook_levenshtein(&x, &y));
    }

    #[test]
    fn large_weight_is_hamming(x in vec(0u8..3, 1..20), seed in vec(0u8..3, 1..20)) {
        let y: Vec<u8> = x.iter().zip(seed.iter().cycle()).map(|(&p, &q)| (p + q) % 3).collect();
        let a = x.len() as u64;
        prop_assert_eq!(oracle_eda(&x, &y, a).unwrap().units, hamming(&x, &y) as u64);
    }
}

#[test]
fn exceeds_reports_nothing() {
    let (x, y) = (ByteText::from("aaaa"), ByteText::from("bbbb"));
    assert_eq!(eda_waves(&x, &y, &Threshold::integer(3, 1).unwrap()), EdaOutcome::Exceeds);
    assert_eq!(eda_banded(&x, &y, &Threshold::integer(3, 1).unwrap()), EdaOutcome::Exceeds);
}
