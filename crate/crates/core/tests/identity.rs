mod common;

use evfe::eigensolve::{eigenvalues, spectral_decomposition, HermitianMatrix, Spectrum};
use evfe::identity::*;
use evfe::io::{generate, CounterRng, GeneratorKind, GeneratorSpec, Stream};
use evfe::verify::oracle_magnitudes;
use proptest::prelude::*;

fn gen(kind: GeneratorKind, n: usize, seed: u64) -> HermitianMatrix<f64> {
    generate(&GeneratorSpec::new(kind, n, seed)).unwrap()
}

fn oracle_abs2(a: &HermitianMatrix<f64>) -> (Spectrum<f64>, Vec<Vec<f64>>) {
    let dec = spectral_decomposition(a).unwrap();
    let n = a.n();
    let w = (0..n).map(|i| (0..n).map(|j| dec.vectors.get(i, j).norm_sqr()).collect()).collect();
    (dec.spectrum, w)
}

#[test]
fn principal_minor_is_an_index_shifted_copy() {
    let a = gen(GeneratorKind::Gue, 5, 3);
    let m = principal_minor(&a, 3).unwrap();
    let expected = common::minor_by_copy(&a, 3);
    assert_eq!(m.n(), 4);
    for (x, y) in m.entries().iter().zip(&expected) {
        assert_eq!(x.re.to_bits(), y.re.to_bits());
        assert_eq!(x.im.to_bits(), y.im.to_bits());
    }
}

#[test]
fn magnitude_squared_against_decomposition() {
    let a = gen(GeneratorKind::Goe, 6, 11);
    let (spec, w) = oracle_abs2(&a);
    let spec_a = eigenvalues(&a).unwrap();
    let tol = spec_a.default_cluster_tol();
    for j in 0..6 {
        let spec_m = eigenvalues(&principal_minor(&a, j).unwrap()).unwrap();
        for i in 0..6 {
            let got = magnitude_squared(&spec_a, &spec_m, i, tol).unwrap();
            assert!((got - w[i][j]).abs() <= 1e-8, "({i},{j}) {got} vs {}", w[i][j]);
        }
    }
    assert_eq!(spec.values(), spec_a.values());
}

#[test]
fn table_against_decomposition_goe8() {
    let a = gen(GeneratorKind::Goe, 8, 1);
    let t = magnitude_table(&a).unwrap();
    let (_, w) = oracle_abs2(&a);
    for i in 0..8 {
        for j in 0..8 {
            assert!((t.get(i, j) - w[i][j]).abs() <= 1e-8);
        }
    }
    assert!(t.row_sum_error() <= 1e-8 * 8.0);
    assert!(t.column_sum_error() <= 1e-8 * 8.0);
}

#[test]
fn clustering_of_uniform_values() {
    let rng = CounterRng::new(200);
    let values: Vec<f64> = (0..200).map(|k| rng.uniform(Stream::Levels, k)).collect();
    let spec = Spectrum::from_unsorted(values).unwrap();
    let c = cluster_spectrum(&spec, 0.0);
    let duplicates = spec.values().windows(2).filter(|w| w[0] == w[1]).count();
    assert_eq!(c.len(), 200 - duplicates);
    let covered: usize = c.clusters.iter().map(|r| r.len()).sum();
    assert_eq!(covered, 200);
}

#[test]
fn cluster_weight_on_rotated_degenerate_matrix() {
    // Q·diag(2,2,5,9)·Qᵀ with Q from Gram–Schmidt on a seeded Gaussian matrix.
    let rng = CounterRng::new(13);
    let n = 4;
    let mut q: Vec<f64> = (0..16).map(|k| rng.normal(Stream::Basis, k)).collect();
    for c in 0..n {
        for _ in 0..2 {
            for p in 0..c {
                let d: f64 = (0..n).map(|r| q[r * n + p] * q[r * n + c]).sum();
                for r in 0..n {
                    q[r * n + c] -= d * q[r * n + p];
                }
            }
        }
        let norm = (0..n).map(|r| q[r * n + c].powi(2)).sum::<f64>().sqrt();
        for r in 0..n {
            q[r * n + c] /= norm;
        }
    }
    let d = [2.0, 2.0, 5.0, 9.0];
    let a = HermitianMatrix::<f64>::from_real_lower_fn(n, |i, j| (0..n).map(|k| q[i * n + k] * d[k] * q[j * n + k]).sum())
        .unwrap();
    let spec_a = eigenvalues(&a).unwrap();
    let tol = spec_a.default_cluster_tol();
    let clustering = cluster_spectrum(&spec_a, tol);
    assert_eq!(clustering.clusters[0], 0..2);
    for j in 0..n {
        let spec_m = eigenvalues(&principal_minor(&a, j).unwrap()).unwrap();
        let w = cluster_weight(&spec_a, &spec_m, 0..2, tol).unwrap();
        // Exact projection weight onto span(q_0, q_1) for coordinate j.
        let exact: f64 = q[j * n].powi(2) + q[j * n + 1].powi(2);
        assert!((w - exact).abs() <= 1e-6, "{j}: {w} vs {exact}");
    }
}

#[test]
fn resolvent_forms_against_linear_solve() {
    let a = gen(GeneratorKind::Goe, 5, 21);
    let run = magnitude_table_run(&a, None).unwrap();
    let spec_a = &run.table.eigenvalues;
    let spread = spec_a.spread();
    let (lo, hi) = (spec_a.values()[0] - spread, spec_a.values()[4] + spread);
    let mut checked = 0;
    for j in 0..5 {
        let col = run.table.column(j);
        for k in 0..100 {
            let lambda = lo + (hi - lo) * k as f64 / 99.0;
            let Ok(det) = resolvent_det_form(spec_a, &run.minor_spectra[j], lambda) else {
                continue;
            };
            let direct = common::resolvent_by_solve(&a, j, lambda);
            assert!((det.value - direct).abs() <= 1e-9 * direct.abs(), "det {lambda}: {} vs {direct}", det.value);
            if det.nearest_pole_gap > 0.01 * spread {
                let pf = resolvent_pf_form(&col, spec_a, lambda).unwrap();
                assert!((pf.value - det.value).abs() <= 1e-9 * det.value.abs());
                checked += 1;
            }
        }
    }
    assert!(checked > 300, "{checked}");
}

#[test]
fn residues_reproduce_weights() {
    let a = gen(GeneratorKind::Gue, 8, 5);
    let run = magnitude_table_run(&a, None).unwrap();
    let spec_a = &run.table.eigenvalues;
    let tol = spec_a.default_cluster_tol();
    for j in 0..8 {
        let spec_m = &run.minor_spectra[j];
        for i in 0..8 {
            let gap = spec_a.values()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &l)| (l - spec_a.values()[i]).abs())
                .fold(f64::INFINITY, f64::min);
            let h = 1e-6 * gap;
            let w = magnitude_squared(spec_a, spec_m, i, tol).unwrap();
            for offset in [h, -h] {
                let r = residue_richardson(spec_a, spec_m, i, offset).unwrap();
                assert!((r - w).abs() <= 1e-4 * w, "({i},{j}) {r} vs {w}");
            }
        }
    }
}

#[test]
fn degenerate_limit_of_perturbed_matrices() {
    let base = generate(&GeneratorSpec::clustered(vec![2, 2, 2], 8)).unwrap();
    let e = gen(GeneratorKind::Goe, 6, 99);
    let limit = magnitude_table(&base).unwrap();
    let limit_totals = limit.cluster_totals(&limit.clustering);
    let oracle = oracle_magnitudes(&base).unwrap();
    let oracle_totals = oracle.cluster_totals(&limit.clustering);
    for (x, y) in limit_totals.iter().flatten().zip(oracle_totals.iter().flatten()) {
        assert!((x - y).abs() <= 1e-6);
    }
    let mut prev = f64::INFINITY;
    for eps in [1e-4, 1e-5, 1e-6] {
        let t = magnitude_table(&base.perturbed(&e, eps).unwrap()).unwrap();
        assert!(!t.clustering.has_degeneracy());
        let totals = t.cluster_totals(&limit.clustering);
        let dev = totals
            .iter()
            .flatten()
            .zip(limit_totals.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(dev < prev, "eps {eps}: {dev} !< {prev}");
        prev = dev;
    }
    assert!(prev <= 1e-4);
}

#[test]
fn exact_zero_weights_for_diagonal_matrices() {
    let a = HermitianMatrix::diagonal(&[-2.0, 0.5, 3.0, 7.0]).unwrap();
    let t = magnitude_table(&a).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(t.get(i, j), if i == j { 1.0 } else { 0.0 });
        }
    }
}

#[test]
fn large_scale_products_stay_in_range() {
    let a = gen(GeneratorKind::Jacobi, 256, 4);
    let spec_a = eigenvalues(&a).unwrap();
    let naive: f64 = spec_a.values()[1..].iter().map(|&l| spec_a.values()[0] - l).product();
    assert!(!naive.is_finite() || naive == 0.0, "{naive}");
    let t = magnitude_table(&a).unwrap();
    assert!(t.weights().iter().all(|w| w.is_finite() && (0.0..=1.0).contains(w)));
}

#[test]
fn f32_table() {
    let a64 = gen(GeneratorKind::Goe, 6, 2);
    let a32 = HermitianMatrix::<f32>::from_lower_fn(6, |i, j| {
        let z = a64.get(i, j);
        num_complex::Complex::new(z.re as f32, z.im as f32)
    })
    .unwrap();
    let t32 = magnitude_table(&a32).unwrap();
    let t64 = magnitude_table(&a64).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            assert!((t32.get(i, j) as f64 - t64.get(i, j)).abs() < 1e-3);
        }
    }
}

fn kind_strategy() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![Just(GeneratorKind::Goe), Just(GeneratorKind::Gue), Just(GeneratorKind::Jacobi)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn table_matches_oracle_and_sums_to_one(kind in kind_strategy(), n in 2usize..33, seed in any::<u64>()) {
        let a = gen(kind, n, seed);
        let s = eigenvalues(&a).unwrap();
        prop_assume!(s.min_gap() > 1e-6 * s.norm());
        let t = magnitude_table(&a).unwrap();
        let (_, w) = oracle_abs2(&a);
        for i in 0..n {
            for j in 0..n {
                prop_assert!((t.get(i, j) - w[i][j]).abs() <= 1e-8);
            }
        }
        prop_assert!(t.row_sum_error() <= 1e-8 * n as f64);
        prop_assert!(t.column_sum_error() <= 1e-8 * n as f64);
    }

    #[test]
    fn affine_invariance(kind in kind_strategy(), n in 2usize..20, seed in any::<u64>(),
                         c in prop_oneof![-10.0..-0.1f64, 0.1..10.0f64], d in -5.0..5.0f64) {
        let a = gen(kind, n, seed);
        let t = magnitude_table(&a).unwrap();
        let u = magnitude_table(&a.affine(c, d)).unwrap();
        let flip = c < 0.0;
        for i in 0..n {
            let ui = if flip { n - 1 - i } else { i };
            for j in 0..n {
                prop_assert!((t.get(i, j) - u.get(ui, j)).abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn permutation_equivariance(kind in kind_strategy(), n in 2usize..20, seed in any::<u64>(), pseed in any::<u64>()) {
        let a = gen(kind, n, seed);
        let p = common::permutation(n, pseed);
        let t = magnitude_table(&a).unwrap();
        let u = magnitude_table(&a.permuted(&p).unwrap()).unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert!((u.get(i, j) - t.get(i, p[j])).abs() <= 1e-10,
                    "({}, {}) {} vs {}", i, j, u.get(i, j), t.get(i, p[j]));
            }
        }
    }

    #[test]
    fn minors_interlace(kind in kind_strategy(), n in 2usize..24, seed in any::<u64>()) {
        let a = gen(kind, n, seed);
        let run = magnitude_table_run(&a, None).unwrap();
        let tol = 1e-10 * run.table.eigenvalues.norm();
        for spec_m in &run.minor_spectra {
            prop_assert!(check_interlacing(&run.table.eigenvalues, spec_m, tol).unwrap().pass);
        }
    }
}
