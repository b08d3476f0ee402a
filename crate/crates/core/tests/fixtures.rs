//! The two worked examples: a rank-1 two-qubit state and a rank-4 four-qubit state.

mod common;

use common::*;
use qprep_core::circuit::count_gates;
use qprep_core::synth::{kronecker_factors, recognize_kronecker_rotations};
use qprep_core::{
    compare, encode_naive, encode_schmidt, normalize, schmidt_split, synthesize_orthogonal, Gate,
    RealMatrix, SynthMode, SynthPath,
};

/// Right basis of the four-qubit example as printed (rows and columns lexicographic).
fn printed_v() -> RealMatrix {
    let a = 1.0 / (2.0 * 10f64.sqrt());
    let b = (0.3f64).sqrt() / 2.0;
    RealMatrix::from_rows(&[
        vec![-a, b, 3.0 * a, -3.0 * b],
        vec![-3.0 * a, 3.0 * b, -a, b],
        vec![b, a, -3.0 * b, -3.0 * a],
        vec![3.0 * b, 3.0 * a, b, a],
    ])
    .unwrap()
}

fn printed_u() -> RealMatrix {
    RealMatrix::from_rows(&[
        vec![0.0, 0.0, 1.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
        vec![0.0, 1.0, 0.0, 0.0],
    ])
    .unwrap()
}

#[test]
fn normalization_matches_the_closed_form() {
    let d = normalize(&four_qubit_raw()).unwrap();
    assert!(max_diff(d.values(), &four_qubit_amplitudes()) <= 1e-15);
    assert!((d.values()[0] - 3.0 * 1.5f64.sqrt() / 20.0).abs() <= 1e-16);
    assert!((d.norm() - 800f64.sqrt()).abs() <= 1e-12);
}

#[test]
fn schmidt_coefficients_of_both_examples() {
    let four = schmidt_split(&normalize(&four_qubit_raw()).unwrap()).unwrap();
    assert!(max_diff(&four.lambda, &four_qubit_lambda()) <= 1e-10);
    assert_eq!(four.rank, 4);
    let two = schmidt_split(&normalize(&two_qubit_data()).unwrap()).unwrap();
    assert!(max_diff(&two.lambda, &[1.0, 0.0]) <= 1e-15);
    assert_eq!(two.rank, 1);
}

#[test]
fn printed_factors_reconstruct_the_data() {
    let split = schmidt_split(&normalize(&four_qubit_raw()).unwrap()).unwrap();
    let sigma = RealMatrix::diagonal(&four_qubit_lambda());
    let rec = dense_mul(&dense_mul(&printed_u(), &sigma), &printed_v().transpose());
    assert!(rec.max_abs_diff(&split.c) <= 1e-15);
    // the computed factors agree with the printed ones up to paired column signs
    for c in 0..4 {
        let (u, pu) = (split.svd.u.column(c), printed_u().column(c));
        let (v, pv) = (split.svd.v.column(c), printed_v().column(c));
        let s = if max_diff(&u, &pu) <= 1e-12 { 1.0 } else { -1.0 };
        let pu: Vec<f64> = pu.iter().map(|x| s * x).collect();
        let pv: Vec<f64> = pv.iter().map(|x| s * x).collect();
        assert!(max_diff(&u, &pu) <= 1e-12 && max_diff(&v, &pv) <= 1e-12, "column {c}");
    }
}

#[test]
fn left_basis_is_x_then_swap() {
    let out = synthesize_orthogonal(&printed_u(), &[0, 1], SynthMode::Exact).unwrap();
    assert_eq!(out.path, SynthPath::AffinePermutation);
    assert_eq!(out.gates, vec![Gate::x(0), Gate::swap(0, 1)]);
}

#[test]
fn right_basis_is_a_product_only_after_a_swap() {
    let v = printed_v();
    assert!(recognize_kronecker_rotations(&v).is_none());
    let swap = RealMatrix::permutation(&[0, 2, 1, 3]);
    let factors = kronecker_factors(&dense_mul(&v, &swap)).unwrap();
    // leading factor is the reflection [[-1/2, √3/2], [√3/2, 1/2]]
    let h = 3f64.sqrt() / 2.0;
    let reflection = RealMatrix::from_rows(&[vec![-0.5, h], vec![h, 0.5]]).unwrap();
    let theta = 3f64.atan();
    let rotation = RealMatrix::from_rows(&[
        vec![theta.cos(), -theta.sin()],
        vec![theta.sin(), theta.cos()],
    ])
    .unwrap();
    let direct = factors[0].max_abs_diff(&reflection) + factors[1].max_abs_diff(&rotation);
    let flipped = factors[0].max_abs_diff(&reflection.scale(-1.0))
        + factors[1].max_abs_diff(&rotation.scale(-1.0));
    assert!(direct.min(flipped) <= 1e-12);
    let out = synthesize_orthogonal(&v, &[2, 3], SynthMode::Exact).unwrap();
    assert_eq!(out.path, SynthPath::KroneckerProduct);
    assert_eq!(out.gates[0], Gate::swap(2, 3));
}

#[test]
fn two_qubit_example_compiles_to_two_rotations() {
    let d = normalize(&two_qubit_data()).unwrap();
    let (c, report) = encode_schmidt(&d, SynthMode::Exact).unwrap();
    let want = [(1.0 / 5f64.sqrt()).asin(), 0.5f64.asin()];
    assert_eq!(c.len(), 2);
    for (q, g) in c.gates().iter().enumerate() {
        match g {
            Gate::Rot { theta, target } => {
                assert_eq!(*target, q);
                assert!((theta - want[q]).abs() <= 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
    let state = apply_oracle(c.gates(), 2, &[1.0, 0.0, 0.0, 0.0]);
    assert!(overlap_sq(&state, &two_qubit_data()) >= 1.0 - 1e-12);
    assert!(report.fidelity.unwrap() >= 1.0 - 1e-12);
}

#[test]
fn four_qubit_example() {
    let d = normalize(&four_qubit_raw()).unwrap();
    let (c, report) = encode_schmidt(&d, SynthMode::Exact).unwrap();
    let mut zero = vec![0.0; 16];
    zero[0] = 1.0;
    let fid = overlap_sq(&apply_oracle(c.gates(), 4, &zero), &four_qubit_amplitudes());
    assert!(fid >= 1.0 - 1e-10);

    let steps = report.steps.unwrap();
    // stage 1 reproduces the two-qubit example's angles on qubits 0 and 1
    let prep: Vec<&Gate> = c.gates()[..steps.prepare].iter().collect();
    let want = [(1.0 / 5f64.sqrt()).asin(), 0.5f64.asin()];
    assert_eq!(prep.len(), 2);
    for (q, g) in prep.iter().enumerate() {
        match g {
            Gate::Rot { theta, target } => {
                assert_eq!(*target, q);
                assert!((theta - want[q]).abs() <= 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
    assert_eq!(
        &c.gates()[steps.prepare..steps.fan],
        &[Gate::cnot(1, 3), Gate::cnot(0, 2)]
    );
    assert_eq!(
        &c.gates()[steps.fan..steps.left_basis],
        &[Gate::x(0), Gate::swap(0, 1)]
    );
    assert_eq!(
        report.synthesis_paths,
        vec![SynthPath::AffinePermutation, SynthPath::KroneckerProduct]
    );
    // the right basis needs its own SWAP, so lowering gives 2 + 3 + 3
    assert_eq!(count_gates(&c).two_qubit_lowered, Some(8));
    assert!(count_gates(&c).two_qubit_lowered.unwrap() <= 12);
}

#[test]
fn state_after_prepare_and_fan() {
    let d = normalize(&four_qubit_raw()).unwrap();
    let (c, report) = encode_schmidt(&d, SynthMode::Exact).unwrap();
    let fan = report.steps.unwrap().fan;
    let mut zero = vec![0.0; 16];
    zero[0] = 1.0;
    let state = apply_oracle(&c.gates()[..fan], 4, &zero);
    let mut want = vec![0.0; 16];
    for (i, l) in four_qubit_lambda().iter().enumerate() {
        want[i * 5] = *l;
    }
    assert!(max_diff(&state, &want) <= 1e-10);
}

#[test]
fn comparison_on_both_examples() {
    let two = normalize(&two_qubit_data()).unwrap();
    let cmp = compare(&two, SynthMode::Exact).unwrap();
    assert_eq!(cmp.schmidt.counts.two_qubit_lowered, Some(0));
    assert_eq!(cmp.naive.counts.two_qubit_lowered, Some(2));

    let four = normalize(&four_qubit_raw()).unwrap();
    let cmp = compare(&four, SynthMode::Exact).unwrap();
    assert_eq!(cmp.schmidt.counts.two_qubit_lowered, Some(8));
    assert_eq!(cmp.naive.counts.two_qubit_lowered, Some(14));
    let (_, naive) = encode_naive(&four).unwrap();
    assert!(naive.fidelity.unwrap() >= 1.0 - 1e-9);
}
