use modpovm_core::geometry::{gq22, grid_3x3, hesse, pappus, recognize, tuple_lines};
use modpovm_core::modgroup::{gamma, gamma0};
use modpovm_core::pauli::PauliGroup;
use modpovm_core::povm::{build_orbit, gram_rank, pair_spectrum, Orbit};
use modpovm_core::*;
use proptest::prelude::*;

const CONDUCTORS: [u32; 7] = [3, 4, 5, 7, 8, 9, 12];

fn cyclo(n: u32) -> impl Strategy<Value = CycloNum> {
    prop::collection::vec((0i64..n as i64, -3i64..=3), 0..5)
        .prop_map(move |terms| CycloNum::from_power_coeffs(&CycloField::new(n), &terms))
}

fn cyclo_pair() -> impl Strategy<Value = (CycloNum, CycloNum)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (cyclo(n), cyclo(n)))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-10 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative((x, y) in cyclo_pair()) {
        prop_assert_eq!((&x * &y).field_norm(), x.field_norm() * y.field_norm());
    }

    #[test]
    fn embedding_is_a_ring_map((x, y) in cyclo_pair()) {
        prop_assert!(close((&x + &y).embed(), x.embed() + y.embed()));
        prop_assert!(close((&x * &y).embed(), x.embed() * y.embed()));
    }

    #[test]
    fn conjugation_and_inverse((x, _) in cyclo_pair()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert!(close(x.conj().embed(), x.embed().conj()));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn reduction_keeps_the_value((x, _) in cyclo_pair()) {
        let r = x.reduce_conductor();
        prop_assert!(r.conductor() <= x.conductor());
        prop_assert!((x.embed() - r.embed()).norm() <= 1e-12 * (1.0 + x.embed().norm()));
        prop_assert_eq!(r.lift(x.field()).unwrap(), x);
    }
}

fn low_rank_matrix() -> impl Strategy<Value = (CycloMatrix, usize)> {
    (prop::sample::select(vec![3u32, 4, 5]), 1usize..6, 1usize..6, 0usize..4).prop_flat_map(|(n, r, c, k)| {
        let k = k.min(r).min(c);
        (prop::collection::vec(cyclo(n), r * k), prop::collection::vec(cyclo(n), k * c)).prop_map(move |(a, b)| {
            let f = CycloField::new(n);
            let rows = |v: &[CycloNum], m: usize, w: usize| (0..m).map(|i| v[i * w..(i + 1) * w].to_vec()).collect::<Vec<_>>();
            let m = if k == 0 {
                CycloMatrix::zero(&f, r, c)
            } else {
                &CycloMatrix::from_rows(&f, rows(&a, r, k)).unwrap() * &CycloMatrix::from_rows(&f, rows(&b, k, c)).unwrap()
            };
            (m, k)
        })
    })
}

fn perm_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_agrees_with_column_elimination((m, k) in low_rank_matrix()) {
        let r = m.rank();
        prop_assert_eq!(r, m.rank_by_columns());
        prop_assert_eq!(r, m.rank_bareiss());
        prop_assert!(r <= k);
    }

    #[test]
    fn permutation_eigenspaces_fill_the_space(img in (2usize..7).prop_flat_map(perm_of)) {
        let p = Perm::from_images(img.iter().map(|&x| x as u32).collect()).unwrap();
        let ord = p.order() as u32;
        let f = CycloField::new(ord);
        let m = CycloMatrix::from_perm(&CycloField::new(1), &p);
        let mut total = 0;
        for k in 0..ord as i64 {
            let l = CycloNum::root_of_unity(&f, ord, k).unwrap();
            let basis = m.eigenspace(&l).unwrap();
            for b in &basis {
                prop_assert!(m.lift(&f).unwrap().shift_diagonal(&l).apply(b).is_zero());
            }
            total += basis.len();
        }
        prop_assert_eq!(total, img.len());
    }
}

fn dims_strategy() -> impl Strategy<Value = DimFactorization> {
    prop::sample::select(vec!["2", "3", "4", "5", "2x2", "2x3", "3x2"]).prop_map(|s| s.parse().unwrap())
}

fn label_for(dims: &DimFactorization) -> impl Strategy<Value = PauliOp> {
    let d = dims.clone();
    prop::collection::vec((0u32..12, 0u32..12), dims.factors().len()).prop_map(move |l| PauliOp::new(&d, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn displacements_are_monomial_and_compose((dims, p, q) in dims_strategy().prop_flat_map(|d| (Just(d.clone()), label_for(&d), label_for(&d)))) {
        let g = PauliGroup::new(&dims);
        let (mp, mq) = (g.matrix(&p), g.matrix(&q));
        for i in 0..g.dim() {
            let nz: Vec<&CycloNum> = (0..g.dim()).map(|j| mp.get(i, j)).filter(|x| !x.is_zero()).collect();
            prop_assert_eq!(nz.len(), 1);
            prop_assert!((&nz[0].pow(dims.exponent())).is_one());
        }
        let prod = g.multiply(&g.product(&[&p]), &q);
        prop_assert_eq!(&mp * &mq, g.matrix(&prod.op).scale(&g.phase_value(prod.phase)));
    }
}

fn random_pair() -> impl Strategy<Value = (usize, Vec<usize>, usize, usize, Vec<usize>)> {
    (2usize..8).prop_flat_map(|n| (Just(n), perm_of(n), 0..=n / 2, 0..=n / 3, perm_of(n)))
}

fn pair_from(n: usize, s: &[usize], k2: usize, k3: usize) -> Option<PermPair> {
    let e: Vec<Vec<usize>> = (0..k2).map(|i| vec![s[2 * i] + 1, s[2 * i + 1] + 1]).collect();
    let v: Vec<Vec<usize>> = (0..k3).map(|i| vec![s[3 * i] + 1, s[3 * i + 1] + 1, s[3 * i + 2] + 1]).collect();
    let e = Perm::from_cycles(n, &e.iter().map(Vec::as_slice).collect::<Vec<_>>()).ok()?;
    let v = Perm::from_cycles(n, &v.iter().map(Vec::as_slice).collect::<Vec<_>>()).ok()?;
    PermPair::new(e, v).ok()
}

fn conjugate(p: &PermPair, pi: &Perm) -> PermPair {
    let c = |x: &Perm| pi.compose(x).compose(&pi.inverse());
    PermPair::new(c(p.sigma_e()), c(p.sigma_v())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn signatures_are_conjugation_invariant((n, s, k2, k3, shuffle) in random_pair()) {
        let Some(pair) = pair_from(n, &s, k2, k3) else { return Ok(()); };
        let sig = pair.signature().unwrap();
        // genus from 12(g - 1) = μ - 3ν₂ - 4ν₃ - 6c is a non-negative integer
        let twelve_g = (12 + n as i64) - 3 * sig.nu2 as i64 - 4 * sig.nu3 as i64 - 6 * sig.cusps() as i64;
        prop_assert!(twelve_g >= 0 && twelve_g % 12 == 0);
        prop_assert_eq!(sig.genus as i64, twelve_g / 12);
        prop_assert_eq!(sig.cusp_widths.iter().sum::<usize>(), n);
        let pi = Perm::from_images(shuffle.iter().map(|&x| x as u32).collect()).unwrap();
        let q = conjugate(&pair, &pi);
        prop_assert_eq!(q.signature().unwrap(), sig);
        prop_assert_eq!(q.canonical(), pair.canonical());
        prop_assert!(q.is_conjugate(&pair));
    }
}

#[test]
fn classical_families() {
    let psi = |n: u64| {
        let mut r = n;
        let mut m = n;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                r = r / p * (p + 1);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            r = r / m * (m + 1);
        }
        r
    };
    for n in 2..=10u64 {
        let g0 = gamma0(n);
        let s = g0.signature().unwrap();
        assert_eq!(s.cusp_widths.iter().sum::<usize>() as u64, psi(n), "N = {n}");
        assert!(s.congruence);
        assert!(gamma(n).signature().unwrap().congruence, "N = {n}");
    }
    assert_eq!(gamma0(2).signature().unwrap().cusp_widths, vec![1, 2]);
}

fn qubit_style_orbits() -> Vec<Vec<CycloMatrix>> {
    let f3 = CycloField::new(1);
    let hesse = Fiducial::from_vector("3".parse().unwrap(), CycloVector::from_ints(&f3, &[0, 1, -1])).unwrap();
    let f6 = CycloField::new(6);
    let w = CycloNum::root_of_unity(&f6, 6, 1).unwrap();
    let one = CycloNum::one(&f6);
    let v4 = CycloVector::in_field(&f6, vec![CycloNum::zero(&f6), one.clone(), -&w, &w - &one]).unwrap();
    let two_qubit = Fiducial::from_vector("2x2".parse().unwrap(), v4).unwrap();
    vec![build_orbit(&hesse), build_orbit(&two_qubit)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn orbit_order_does_not_matter(which in 0usize..2, seed in prop::collection::vec(any::<u32>(), 16)) {
        let projs = &qubit_style_orbits()[which];
        let mut idx: Vec<usize> = (0..projs.len()).collect();
        idx.sort_by_key(|&i| seed[i % seed.len()].wrapping_mul(i as u32 + 1));
        let shuffled: Vec<CycloMatrix> = idx.iter().map(|&i| projs[i].clone()).collect();
        prop_assert_eq!(gram_rank(&shuffled), gram_rank(projs));
        let key = |p: &[CycloMatrix]| pair_spectrum(p).iter().map(|e| (e.value.to_text(), e.multiplicity)).collect::<Vec<_>>();
        prop_assert_eq!(key(&shuffled), key(projs));
    }

    #[test]
    fn recognition_ignores_labels(which in 0usize..4, p9 in perm_of(9), p15 in perm_of(15)) {
        let s = [hesse(), gq22(), grid_3x3(), pappus()][which].clone();
        let perm = if s.num_points() == 9 { p9 } else { p15 };
        prop_assert_eq!(recognize(&s.relabel(&perm)), recognize(&s));
    }
}

#[test]
fn relabeled_sic_lines_stay_hesse() {
    let f = CycloField::new(1);
    let fid = Fiducial::from_vector("3".parse().unwrap(), CycloVector::from_ints(&f, &[0, 1, -1])).unwrap();
    let o = Orbit::new(&fid);
    let t = |a, b| CycloNum::from_fraction(&f, a, b);
    let s = tuple_lines(&o, 3, &[t(1, 8), t(-1, 8)], false);
    for shift in 1..9 {
        let perm: Vec<usize> = (0..9).map(|i| (i * 2 + shift) % 9).collect();
        assert_eq!(recognize(&s.relabel(&perm)), recognize(&s));
    }
}
