use crate::combinatorics::Partition;

use super::SymmetricPolynomial;

/// `s_λ(x_1, ..., x_m)` as the generating function of semistandard tableaux
/// of shape `λ` with entries in `1..=m`. Zero when `λ` has more than `m` rows.
pub fn schur_polynomial(shape: &Partition, m: usize) -> SymmetricPolynomial {
    let mut poly = SymmetricPolynomial::zero(m);
    if shape.len() > m {
        return poly;
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; m];
    fill(&cells, 0, m, &mut filling, &mut content, &mut poly);
    poly
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    m: usize,
    filling: &mut [Vec<usize>],
    content: &mut [u32],
    out: &mut SymmetricPolynomial,
) {
    let Some(&(row, col)) = cells.get(at) else {
        out.add_term(content.to_vec(), 1);
        return;
    };
    let mut lo = 1;
    if col > 0 {
        lo = lo.max(filling[row][col - 1]);
    }
    if row > 0 {
        lo = lo.max(filling[row - 1][col] + 1);
    }
    for v in lo..=m {
        filling[row][col] = v;
        content[v - 1] += 1;
        fill(cells, at + 1, m, filling, content, out);
        content[v - 1] -= 1;
    }
    filling[row][col] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_box_is_power_sum() {
        let s = schur_polynomial(&p(&[1]), 3);
        assert_eq!(s.terms().len(), 3);
        for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert_eq!(s.coefficient(&e), 1);
        }
    }

    #[test]
    fn complete_homogeneous_two_variables() {
        let s = schur_polynomial(&p(&[2]), 2);
        assert_eq!(s.to_string(), "x1^2 + x1*x2 + x2^2");
    }

    #[test]
    fn too_many_rows_vanish() {
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_zero());
        for size in 0..=5 {
            for shape in partitions_of(size) {
                for m in 1..=4 {
                    let s = schur_polynomial(&shape, m);
                    assert_eq!(s.is_zero(), shape.len() > m, "{shape} in {m} variables");
                    assert!(s.is_symmetric());
                }
            }
        }
    }

    #[test]
    fn staircase_in_three_variables() {
        // s_(2,1)(x1,x2,x3) has 8 tableaux: six x_i^2 x_j terms and 2*x1x2x3
        let s = schur_polynomial(&p(&[2, 1]), 3);
        assert_eq!(s.coefficient(&[1, 1, 1]), 2);
        assert_eq!(s.coefficient(&[2, 1, 0]), 1);
        assert_eq!(s.terms().values().sum::<i64>(), 8);
    }

    #[test]
    fn schur_expansion_recovers_basis() {
        let s = schur_polynomial(&p(&[2, 1]), 3);
        let expansion = s.schur_expansion().unwrap();
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion[&p(&[2, 1])], 1);
    }
}
