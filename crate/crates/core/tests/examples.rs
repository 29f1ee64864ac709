use horncodes::codes::{evaluation_code, grassmann_code_params, min_distance, nrc_points, Divisor, DEFAULT_EXHAUSTION_BOUND};
use horncodes::combinatorics::{conjugate, partition_from_index_set, partitions_of, q_binomial, IndexSet, Partition};
use horncodes::field::{
    euclid_quotients, horn_instance, invariant_factor_partition, local_degree, smith_normal_form, Field, P1Point, Poly,
    PolyMatrix, RationalFunction,
};
use horncodes::horn::{horn_lr_consistency, t_set, u_set, IndexTriple};
use horncodes::symmetric::{character_value, kronecker_coefficient, lr_coefficient, CycleType};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn gf(q: u64) -> Field {
    Field::of_order(q).unwrap()
}

#[test]
fn partitions_and_conjugates() {
    assert_eq!(partitions_of(0), vec![Partition::empty()]);
    assert_eq!(partitions_of(4), ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"].map(p).to_vec());
    assert_eq!(partitions_of(6).len(), 11);
    assert_eq!(conjugate(&p("5,3,3,1")), p("4,3,3,1,1"));
}

#[test]
fn subspace_counts() {
    assert_eq!(q_binomial(3, 1, 2).unwrap(), 35u32.into());
    assert_eq!(q_binomial(2, 0, 3).unwrap(), 13u32.into());
    assert_eq!(q_binomial(4, 4, 7).unwrap(), 1u32.into());
    let params = grassmann_code_params(&gf(2), 3, 1).unwrap();
    assert_eq!(params.length, 35u32.into());
    assert_eq!(params.dimension_printed, 3u32.into());
    assert_eq!(params.dimension_bruteforce, Some(6));
    assert_eq!(grassmann_code_params(&gf(5), 1, 0).unwrap().dimension_bruteforce, Some(2));
}

#[test]
fn index_set_partitions() {
    let set = |xs: &[usize]| IndexSet::new(xs.to_vec(), 4).unwrap();
    assert_eq!(partition_from_index_set(&set(&[1, 2]), 2).unwrap(), Partition::empty());
    assert_eq!(partition_from_index_set(&set(&[1, 3]), 2).unwrap(), p("1"));
    assert_eq!(partition_from_index_set(&set(&[2, 4]), 2).unwrap(), p("2,1"));
}

#[test]
fn coefficients() {
    assert_eq!(lr_coefficient(&Partition::empty(), &p("2"), &p("2")), 1);
    assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("2,1")), 1);
    assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
    assert_eq!(character_value(&p("1,1"), &CycleType::new(p("2"))).unwrap(), -1);
    assert_eq!(character_value(&p("2,1"), &CycleType::new(p("3"))).unwrap(), -1);
    assert_eq!(kronecker_coefficient(&p("1,1"), &p("1,1"), &p("2")).unwrap(), 1);
    assert_eq!(kronecker_coefficient(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), 1);
}

#[test]
fn appendix_rows() {
    let line = |s: &str, n| IndexTriple::parse(s, n).unwrap();
    let u21 = u_set(2, 1).unwrap();
    assert_eq!(u21.len(), 3);
    for t in ["{1}|{1}|{1}", "{1}|{2}|{2}", "{2}|{1}|{2}"] {
        assert!(u21.contains(&line(t, 2)), "{t}");
    }
    assert_eq!(u_set(4, 2).unwrap().len(), 27);
    assert_eq!(t_set(4, 2).unwrap().len(), 21);
    assert_eq!(u_set(3, 2).unwrap().len(), 6);
    assert_eq!(t_set(4, 3).unwrap(), u_set(4, 3).unwrap());

    let report = horn_lr_consistency(4, 2).unwrap();
    let outlier = report.outside_t.iter().find(|e| e.triple == line("{1,2}|{1,4}|{2,3}", 4)).unwrap();
    assert_eq!((outlier.lambda.clone(), outlier.mu.clone(), outlier.nu.clone()), (Partition::empty(), p("2"), p("1,1")));
    assert_eq!(outlier.coefficient, 0);
    assert!(horn_lr_consistency(2, 1).unwrap().in_t.iter().all(|e| e.coefficient == 1));
}

#[test]
fn field_and_polynomial_examples() {
    let f5 = gf(5);
    assert_eq!(f5.mul(3, 2), 1);
    assert_eq!(gf(7).inv(3), Some(5));
    let f3 = gf(3);
    let q = euclid_quotients(&Poly::parse(&f3, "x^2 + 1").unwrap(), &Poly::parse(&f3, "x").unwrap()).unwrap();
    assert_eq!(q.iter().map(ToString::to_string).collect::<Vec<_>>(), ["x", "x"]);

    let square = RationalFunction::parse(&f5, "x^2").unwrap();
    assert_eq!(local_degree(&square, P1Point::Finite(0)).unwrap(), 2);
    assert_eq!(local_degree(&square, P1Point::Finite(1)).unwrap(), 1);
}

#[test]
fn smith_examples() {
    let f2 = gf(2);
    let a = PolyMatrix::parse(&f2, "x; 1 | 0; x").unwrap();
    let factors: Vec<String> = smith_normal_form(&a).factors.iter().map(ToString::to_string).collect();
    assert_eq!(factors, ["1", "x^2"]);
    let f3 = gf(3);
    let a = PolyMatrix::parse(&f3, "x^2; 0 | 0; x").unwrap();
    assert_eq!(invariant_factor_partition(&a).unwrap(), p("2,1"));
    assert_eq!(invariant_factor_partition(&PolyMatrix::identity(&f3, 3)).unwrap(), Partition::empty());
    let b = PolyMatrix::parse(&f3, "x; 0 | 0; 1").unwrap();
    let h = horn_instance(&a, &b).unwrap();
    assert_eq!((h.alpha, h.beta, h.gamma.size()), (p("2,1"), p("1"), 4));
}

#[test]
fn code_examples() {
    let f5 = gf(5);
    let d = Divisor::parse(&f5, "1*[inf]").unwrap();
    let points: Vec<P1Point> = (0..4).map(P1Point::Finite).collect();
    let code = evaluation_code(&d, &points).unwrap();
    assert_eq!((code.length(), code.dimension()), (4, 2));
    assert_eq!(min_distance(&code, DEFAULT_EXHAUSTION_BOUND).unwrap(), 3);

    let f7 = gf(7);
    let d = Divisor::parse(&f7, "2*[inf]").unwrap();
    let points: Vec<P1Point> = f7.values().map(P1Point::Finite).collect();
    let code = evaluation_code(&d, &points).unwrap();
    assert_eq!((code.length(), code.dimension()), (7, 3));
    assert_eq!(min_distance(&code, DEFAULT_EXHAUSTION_BOUND).unwrap(), 5);

    let conic: Vec<String> = nrc_points(&gf(3), 2).unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(conic, ["(1:0:0)", "(1:1:1)", "(1:2:1)", "(0:0:1)"]);
}
