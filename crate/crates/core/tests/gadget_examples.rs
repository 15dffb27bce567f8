use weda_core::gadgets::{alignment_gadget, d_plus, or_composition, ov_reduce, OvInstance, PAD};
use weda_core::oracle::{oracle_eda, oracle_ov};

#[test]
fn orthogonal_pair_is_within_threshold() {
    let inst = OvInstance::new(vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 1]]).unwrap();
    assert!(oracle_ov(&inst).unwrap());
    for a in [4, 8] {
        for m in [1, 2] {
            let g = ov_reduce(&inst, a, m).unwrap();
            assert!(oracle_eda(&g.x, &g.y, a).unwrap().units <= g.threshold_units);
        }
    }
}

#[test]
fn all_ones_exceeds_threshold() {
    let inst = OvInstance::new(vec![vec![1, 1]; 2], vec![vec![1, 1]; 2]).unwrap();
    assert!(!oracle_ov(&inst).unwrap());
    for a in [4, 8] {
        for m in [1, 2] {
            let g = ov_reduce(&inst, a, m).unwrap();
            assert!(oracle_eda(&g.x, &g.y, a).unwrap().units > g.threshold_units);
        }
    }
}

#[test]
fn alphabet_stays_below_twelve() {
    let inst = OvInstance::random(3, 4, 0.5, 9);
    for m in 1..=3 {
        let g = ov_reduce(&inst, 8, m).unwrap();
        assert!(g.x.iter().chain(&g.y).all(|&c| c < 12 && c != PAD));
        assert_eq!(g.meta.construction, "ov-reduce-v1");
    }
}

#[test]
fn gadget_output_is_deterministic() {
    let inst = OvInstance::random(3, 2, 0.5, 1);
    assert_eq!(ov_reduce(&inst, 4, 3).unwrap(), ov_reduce(&inst, 4, 3).unwrap());
}

#[test]
fn single_pair_or_composition_readback() {
    let r = or_composition(&[(vec![1, 0, 1], vec![0, 1])], 3).unwrap();
    let mut x = vec![6, 6];
    x.extend([7; 5]);
    x.extend([1, 0, 1]);
    x.extend([8; 5]);
    x.extend([6, 6]);
    assert_eq!(r.x, x);
    assert_eq!(r.y, vec![0, 1]);
}

#[test]
fn alignment_constant() {
    let xs = vec![vec![0, 1]; 3];
    let ys = vec![vec![1, 1, 0]; 2];
    let g = alignment_gadget(&xs, &ys, 2).unwrap();
    assert_eq!(g.c_units, 15);
    assert_eq!(g.y.len(), (2 * 3 + 3 * 2) * 3);
    assert_eq!(g.x.len(), 3 * (2 + 4 * 3));
}

#[test]
fn d_plus_of_empty_y() {
    assert_eq!(d_plus(&[0, 1, 2, 3], &[], 7).unwrap().units, 0);
}
