use std::collections::BTreeSet;

use horncodes::codes::{
    evaluation_code, grassmann_orbit, min_distance, nrc_points, omega_closure, omega_set, psi_closure,
    riemann_roch_basis, subspaces, veronese_map, Divisor, ProjectivePoint,
};
use horncodes::combinatorics::{conjugate, partition_from_index_set, partitions_of, q_binomial, IndexSet, Partition};
use horncodes::field::{random, smith_normal_form, Field, P1Point, Poly, PolyMatrix, RationalFunction};
use horncodes::horn::{t_set, u_set};
use horncodes::oracle;
use horncodes::symmetric::{kronecker_coefficient, lr_coefficient, schur_polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gf(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

fn pick(n: usize, index: usize) -> Partition {
    let all = partitions_of(n);
    all[index % all.len()].clone()
}

fn partition_up_to(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max, any::<usize>()).prop_map(|(n, i)| pick(n, i))
}

fn field_order() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])
}

#[test]
fn partition_counts_match_recursive_generation() {
    for n in 0..=10 {
        let fast: BTreeSet<_> = partitions_of(n).into_iter().collect();
        let slow: BTreeSet<_> = oracle::partitions_recursive(n).into_iter().collect();
        assert_eq!(fast, slow, "n={n}");
        assert_eq!(partitions_of(n).len(), fast.len());
    }
}

#[test]
fn q_binomial_matches_enumeration() {
    for q in [2u32, 3] {
        let field = gf(q as u64);
        for n in 1..=4u32 {
            for r in 0..=n {
                let count = subspaces(&field, n as usize + 1, r as usize + 1).len();
                assert_eq!(q_binomial(n, r, q as u64).unwrap(), count.into(), "q={q} n={n} r={r}");
            }
        }
    }
}

#[test]
fn horn_sets_nest() {
    for n in 2..=6 {
        for r in 1..n {
            let u: BTreeSet<_> = u_set(n, r).unwrap().into_iter().collect();
            let t: BTreeSet<_> = t_set(n, r).unwrap().into_iter().collect();
            assert!(t.is_subset(&u), "n={n} r={r}");
            if r == 1 {
                assert_eq!(t, u, "n={n}");
            }
            for triple in &u {
                let (l, m, k) = triple.partitions();
                assert_eq!(l.size() + m.size(), k.size(), "{triple}");
            }
        }
    }
}

#[test]
fn kronecker_with_trivial_is_delta() {
    for n in 1..=6 {
        let trivial = Partition::new(vec![n]).unwrap();
        for a in partitions_of(n) {
            for b in partitions_of(n) {
                assert_eq!(kronecker_coefficient(&a, &b, &trivial).unwrap(), u64::from(a == b));
            }
        }
    }
}

#[test]
fn schur_vanishes_exactly_beyond_the_variable_count() {
    for size in 0..=5 {
        for lambda in partitions_of(size) {
            for m in 1..=4 {
                assert_eq!(schur_polynomial(&lambda, m).is_zero(), lambda.len() > m, "{lambda} m={m}");
            }
        }
    }
}

#[test]
fn schur_products_expand_by_lr_coefficients() {
    for a in 0..=4 {
        for b in 0..=4 - a {
            for lambda in partitions_of(a) {
                for mu in partitions_of(b) {
                    let m = (a + b).max(1);
                    let product = &schur_polynomial(&lambda, m) * &schur_polynomial(&mu, m);
                    let mut rest = product.clone();
                    for nu in partitions_of(a + b) {
                        let c = lr_coefficient(&lambda, &mu, &nu) as i64;
                        rest = &rest - &schur_polynomial(&nu, m).scale(c);
                    }
                    assert!(rest.is_zero(), "λ={lambda} μ={mu}");
                    assert_eq!(product.variable_count(), m);
                }
            }
        }
    }
}

#[test]
fn closures_are_extensive_and_idempotent() {
    for n in 0..=6 {
        for mask in 0u32..(1 << (n + 1)) {
            let set: BTreeSet<usize> = (0..=n).filter(|i| mask >> i & 1 == 1).collect();
            let psi = psi_closure(&set, n).unwrap();
            assert!(set.is_subset(&psi));
            assert_eq!(psi_closure(&psi, n).unwrap(), psi);
            for p in [2, 3, 5] {
                let omega = omega_closure(&set, n, p).unwrap();
                assert!(set.is_subset(&omega));
                assert_eq!(omega_closure(&omega, n, p).unwrap(), omega);
            }
        }
        for j in 0..=n {
            for p in [2, 3, 5, 7] {
                assert_eq!(omega_set(j, n, p).unwrap(), oracle::omega_set_plain(j, n, p));
            }
        }
    }
}

#[test]
fn veronese_image_is_the_normal_curve() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let field = gf(q);
        let line: Vec<ProjectivePoint> = P1Point::all(&field)
            .into_iter()
            .map(|p| match p {
                P1Point::Finite(t) => ProjectivePoint::new(&field, vec![1, t]).unwrap(),
                P1Point::Infinity => ProjectivePoint::new(&field, vec![0, 1]).unwrap(),
            })
            .collect();
        for d in 1..=4 {
            let image: BTreeSet<_> = line.iter().map(|p| veronese_map(p, d).unwrap()).collect();
            let curve: BTreeSet<_> = nrc_points(&field, d).unwrap().into_iter().collect();
            assert_eq!(image, curve, "q={q} d={d}");
        }
    }
}

#[test]
fn general_linear_orbits_are_whole_grassmannians() {
    let field = gf(2);
    for m in 2..=4 {
        let transvections: Vec<Vec<Vec<u32>>> = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut g: Vec<Vec<u32>> = (0..m).map(|r| (0..m).map(|c| u32::from(r == c)).collect()).collect();
                g[i][j] = 1;
                g
            })
            .collect();
        for k in 1..m {
            let u: Vec<Vec<u32>> = (0..k).map(|r| (0..m).map(|c| u32::from(r == c)).collect()).collect();
            let orbit = grassmann_orbit(&field, &u, &transvections).unwrap();
            let expected = q_binomial(m as u32 - 1, k as u32 - 1, 2).unwrap();
            assert_eq!(orbit.len(), usize::try_from(expected).unwrap(), "m={m} k={k}");
        }
    }
}

#[test]
fn riemann_roch_dimension_law() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5252);
    let mut tested = 0;
    while tested < 200 {
        let field = gf([3u64, 4, 5, 7][rng.random_range(0..4)]);
        let points = P1Point::all(&field);
        let terms: Vec<(P1Point, i64)> = (0..rng.random_range(0..=3))
            .map(|_| (points[rng.random_range(0..points.len())], rng.random_range(-3..=4)))
            .collect();
        let d = Divisor::new(&field, terms).unwrap();
        if !(-3..=6).contains(&d.degree()) {
            continue;
        }
        tested += 1;
        let basis = riemann_roch_basis(&d);
        assert_eq!(basis.len() as i64, (d.degree() + 1).max(0), "{d}");
        assert!(basis.iter().all(|f| horncodes::codes::in_riemann_roch_space(f, &d)), "{d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(p in partition_up_to(12)) {
        let c = conjugate(&p);
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(conjugate(&c), p);
    }

    #[test]
    fn partition_text_round_trips(p in partition_up_to(12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn q_binomial_duality(q in prop::sample::select(vec![2u64, 3, 4, 5, 7]), n in 1u32..=8, r in 0u32..8) {
        prop_assume!(r < n);
        prop_assert_eq!(q_binomial(n, r, q).unwrap(), q_binomial(n, n - r - 1, q).unwrap());
    }

    #[test]
    fn index_set_partition_size(n in 1usize..=9, mask in any::<u16>()) {
        let elements: Vec<usize> = (1..=n).filter(|i| mask >> i & 1 == 1).collect();
        let r = elements.len();
        let set = IndexSet::new(elements.clone(), n).unwrap();
        let lambda = partition_from_index_set(&set, r).unwrap();
        prop_assert_eq!(lambda.size() + r * (r + 1) / 2, elements.iter().sum::<usize>());
    }

    #[test]
    fn lr_is_symmetric(a in 0usize..=6, b in 0usize..=6, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        prop_assume!(a + b <= 6);
        let (lambda, mu, nu) = (pick(a, i), pick(b, j), pick(a + b, k));
        prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&mu, &lambda, &nu));
    }

    #[test]
    fn kronecker_is_symmetric(n in 1usize..=5, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let (a, b, c) = (pick(n, i), pick(n, j), pick(n, k));
        let base = kronecker_coefficient(&a, &b, &c).unwrap();
        prop_assert_eq!(kronecker_coefficient(&b, &a, &c).unwrap(), base);
        prop_assert_eq!(kronecker_coefficient(&c, &b, &a).unwrap(), base);
        prop_assert_eq!(kronecker_coefficient(&a, &c, &b).unwrap(), base);
    }

    #[test]
    fn polynomial_text_round_trips(q in field_order(), seed in any::<u64>()) {
        let field = gf(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random::poly(&mut rng, &field, 6);
        prop_assert_eq!(Poly::parse(&field, &f.to_string()).unwrap(), f);
        let phi = random::rational_function(&mut rng, &field, 4);
        prop_assert_eq!(RationalFunction::parse(&field, &phi.to_string()).unwrap(), phi);
    }

    #[test]
    fn division_with_remainder(q in field_order(), seed in any::<u64>()) {
        let field = gf(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random::poly(&mut rng, &field, 7);
        let g = random::nonzero_poly(&mut rng, &field, 4);
        let (quot, rem) = f.div_rem(&g).unwrap();
        prop_assert_eq!(&(&quot * &g) + &rem, f);
        prop_assert!(rem.is_zero() || rem.degree() < g.degree());
    }

    #[test]
    fn smith_factors_multiply_to_the_determinant(q in prop::sample::select(vec![2u64, 3, 5]), n in 1usize..=4, seed in any::<u64>()) {
        let field = gf(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::matrix(&mut rng, &field, n, n, 3);
        let snf = smith_normal_form(&a);
        let product = snf.factors.iter().fold(Poly::one(&field), |acc, d| &acc * d);
        let det = a.determinant().unwrap();
        prop_assert_eq!(product, det.monic());
        prop_assert_eq!(PolyMatrix::parse(&field, &a.to_text()).unwrap(), a);
    }

    #[test]
    fn divisor_text_round_trips(q in field_order(), seed in any::<u64>()) {
        use rand::Rng;
        let field = gf(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = P1Point::all(&field);
        let terms: Vec<(P1Point, i64)> = (0..rng.random_range(0..=4))
            .map(|_| (points[rng.random_range(0..points.len())], rng.random_range(-4..=4)))
            .collect();
        let d = Divisor::new(&field, terms).unwrap();
        prop_assert_eq!(Divisor::parse(&field, &d.to_string()).unwrap(), d);
    }

    #[test]
    fn evaluation_codes_are_mds(q in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9]), a in 0i64..=6, b in 0i64..=3, at in any::<u32>()) {
        let field = gf(q);
        let p0 = at % field.order();
        let d = Divisor::new(&field, [(P1Point::Infinity, a), (P1Point::Finite(p0), b)]).unwrap();
        let points: Vec<P1Point> = field.values().filter(|&v| b == 0 || v != p0).map(P1Point::Finite).collect();
        let n = points.len();
        prop_assume!((d.degree() as usize) < n);
        prop_assume!((q as u128).pow(d.degree() as u32 + 1) <= 100_000);
        let code = evaluation_code(&d, &points).unwrap();
        prop_assert_eq!(code.dimension() as i64, d.degree() + 1);
        prop_assert_eq!(min_distance(&code, 100_000).unwrap(), n - code.dimension() + 1);
    }
}
