//! Inputs shared by the benches.

use tqft_core::SimplicialComplex;

/// `n × m` grid torus, each square split along its diagonal. Needs `n, m >= 3`.
pub fn grid_torus(n: usize, m: usize) -> SimplicialComplex {
    let v = |i: usize, j: usize| (i % n) * m + (j % m);
    let tris: Vec<Vec<usize>> = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .flat_map(|(i, j)| [vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)], vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]])
        .collect();
    SimplicialComplex::build(&tris).expect("grid torus")
}

#[cfg(test)]
mod tests {
    use tqft_core::excalc::betti_numbers;

    #[test]
    fn grid_torus_is_a_torus() {
        let t = super::grid_torus(4, 5);
        assert_eq!(t.counts(), vec![20, 60, 40]);
        assert_eq!(betti_numbers(&t), vec![1, 2, 1]);
    }
}
