mod common;

use common::fock;
use common::models::{families, projector, twisted_chain};
use nhent_core::band::{band_energy, real_space_hamiltonian, Band, Boundary, ModelParams};
use nhent_core::numerics::ComplexMatrix;
use nhent_core::state::{add_quasiparticle, correlation, fill_ground, grid, CorrelationMatrix};
use nhent_core::{c64, C64};
use proptest::prelude::*;

fn ground(p: &ModelParams, l: usize, bc: Boundary, dk: f64) -> CorrelationMatrix {
    let g = grid(l, bc, dk).unwrap();
    correlation(p, &g, &fill_ground(p, &g)).unwrap()
}

#[test]
fn fock_space_oracle_three_cells() {
    let l = 3;
    for (name, p) in families() {
        let g = grid(l, Boundary::Pbc, 0.1).unwrap();
        let h = twisted_chain(&p, l, g.wrap_phase());
        let mut bloch: Vec<C64> = Vec::new();
        for &k in &g.ks {
            bloch.push(band_energy(&p, k, Band::Lower));
            bloch.push(band_energy(&p, k, Band::Upper));
        }
        let rs = nhent_core::numerics::eigenvalues(&h).unwrap();
        assert!(
            common::multiset_distance(&rs, &bloch) < 1e-9,
            "{name}: twisted chain spectrum"
        );

        let basis = fock::sector(2 * l, l);
        let (_, r, lv) = fock::biorthogonal_ground(&fock::many_body(&h, &basis));
        let brute = fock::correlation(2 * l, &basis, &r, &lv);
        let c = correlation(&p, &g, &fill_ground(&p, &g)).unwrap();
        let err = c.matrix.sub(&brute).max_abs();
        assert!(err < 1e-8, "{name}: correlation differs by {err:e}");
    }
}

#[test]
fn hermitian_limit_matches_spectral_projector() {
    let ps = [
        ModelParams::real(1.0, 1.0, 2.0, 2.0),
        ModelParams::new(
            c64(0.4, 0.0),
            c64(0.5, 0.3),
            c64(0.5, -0.3),
            c64(1.1, -0.7),
            c64(1.1, 0.7),
        ),
    ];
    for p in ps {
        assert!(p.is_hermitian(0.0));
        let c = ground(&p, 10, Boundary::Pbc, 0.0);
        let proj = projector(
            &real_space_hamiltonian(&p, 10, Boundary::Pbc)
                .unwrap()
                .matrix,
        );
        let err = c.matrix.sub(&proj.transpose()).max_abs();
        assert!(err < 1e-10, "projector mismatch {err:e}");
    }
}

#[test]
fn particle_number_is_half_filling() {
    for (name, p) in families() {
        for bc in [Boundary::Pbc, Boundary::Apbc] {
            let c = ground(&p, 40, bc, 1e-8);
            assert!(
                (c.matrix.trace() - c64(40.0, 0.0)).norm() < 1e-8,
                "{name} {bc:?}"
            );
        }
    }
}

#[test]
fn k_square_root_correlations_diverge_as_inverse_sqrt_twist() {
    // The exceptional mode adds ~1/(L√δκ) on top of an O(1) background, so the
    // chain must be short enough for it to dominate already at δκ = 1e-4.
    let p = ModelParams::real(1.0, 0.7, 1.0, 0.3);
    let max_ab = |l: usize, dk: f64| {
        let c = ground(&p, l, Boundary::Pbc, dk);
        (0..l)
            .flat_map(|x| (0..l).map(move |y| (x, y)))
            .map(|(x, y)| c.block(x, y)[0][1].norm())
            .fold(0.0, f64::max)
    };
    let ratio = max_ab(20, 1e-6) / max_ab(20, 1e-4);
    assert!((ratio / 10.0 - 1.0).abs() < 0.15, "L=20 ratio {ratio}");
    let ratio = max_ab(80, 1e-8) / max_ab(80, 1e-6);
    assert!((ratio / 10.0 - 1.0).abs() < 0.15, "L=80 ratio {ratio}");
}

fn cplx() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| c64(a, b))
}

fn params() -> impl Strategy<Value = ModelParams> {
    (cplx(), cplx(), cplx(), cplx(), cplx())
        .prop_map(|(u, v1, v2, w1, w2)| ModelParams::new(u, v1, v2, w1, w2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ground_state_is_block_toeplitz(p in params()) {
        let c = ground(&p, 8, Boundary::Pbc, 1e-3);
        for x in 0..7 {
            for y in 0..7 {
                let (a, b) = (c.block(x, y), c.block(x + 1, y + 1));
                for i in 0..2 { for j in 0..2 {
                    prop_assert!((a[i][j] - b[i][j]).norm() < 1e-10);
                }}
            }
        }
    }

    #[test]
    fn common_rescaling_leaves_correlations(p in params(), s in 0.2..5.0f64) {
        let q = ModelParams::new(p.u * s, p.v1 * s, p.v2 * s, p.w1 * s, p.w2 * s);
        let a = ground(&p, 8, Boundary::Pbc, 1e-3);
        let b = ground(&q, 8, Boundary::Pbc, 1e-3);
        prop_assert!(a.matrix.sub(&b.matrix).max_abs() < 1e-10);
    }

    #[test]
    fn quasiparticle_difference_has_rank_one(p in params(), n in 0usize..8) {
        let g = grid(8, Boundary::Pbc, 1e-3).unwrap();
        let occ = fill_ground(&p, &g);
        let band = if occ.contains(n, Band::Lower) { Band::Upper } else { Band::Lower };
        prop_assume!(!occ.contains(n, band));
        let q = add_quasiparticle(&occ, n, band).unwrap();
        let d = correlation(&p, &g, &q).unwrap().matrix.sub(&correlation(&p, &g, &occ).unwrap().matrix);
        let (mut i0, mut j0) = (0, 0);
        for i in 0..16 { for j in 0..16 {
            if d[(i, j)].norm() > d[(i0, j0)].norm() { i0 = i; j0 = j; }
        }}
        let piv = d[(i0, j0)];
        let rank1 = ComplexMatrix::from_fn(16, 16, |i, j| d[(i, j0)] * d[(i0, j)] / piv);
        prop_assert!(d.sub(&rank1).max_abs() < 1e-10 * d.max_abs().max(1.0));
        prop_assert!((d.trace() - c64(1.0, 0.0)).norm() < 1e-10);
    }
}
