//! Exact Gaussian elimination over the rationals, used for span membership,
//! basis extraction and rank computations. Pivoting is deterministic: the
//! earliest column with a nonzero entry, first eligible row.

use num::Zero;

use crate::scalar::Rat;

/// Incremental row reducer holding an echelon basis of the rows inserted so
/// far. Rows are normalized so each pivot is 1.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    /// `(pivot column, row)` sorted by pivot column.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current basis, returning the residual.
    fn residual(&self, mut row: Vec<Rat>) -> Vec<Rat> {
        for (pivot, basis_row) in &self.rows {
            let factor = row[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, b) in row.iter_mut().zip(basis_row.iter()) {
                *r -= &factor * b;
            }
        }
        row
    }

    /// Inserts `row` if it is independent of the rows so far; returns
    /// whether it was inserted.
    pub fn insert(&mut self, row: Vec<Rat>) -> bool {
        let mut row = self.residual(row);
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = row[pivot].clone();
        for c in row.iter_mut() {
            *c /= &lead;
        }
        let at = self
            .rows
            .partition_point(|(existing, _)| *existing < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: Vec<Rat>) -> bool {
        self.residual(row).iter().all(Rat::is_zero)
    }
}

/// Rank of a list of rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<Rat>>) -> usize {
    let mut reducer = RowReducer::new();
    for row in rows {
        reducer.insert(row);
    }
    reducer.rank()
}

/// Solves `Σ_i λ_i · generators[i] = target` exactly. Returns one solution
/// (free variables set to zero) or `None` when the target is outside the
/// span. All rows must have equal length.
pub fn solve_combination(generators: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let cols = target.len();
    debug_assert!(generators.iter().all(|g| g.len() == cols));
    // augmented system: unknowns are the λ_i, equations are the coordinates
    let mut matrix: Vec<Vec<Rat>> = (0..cols)
        .map(|c| {
            let mut row: Vec<Rat> = generators.iter().map(|g| g[c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();

    let unknowns = generators.len();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row, column)
    let mut next_row = 0;
    for col in 0..unknowns {
        let Some(found) = (next_row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(next_row, found);
        let lead = matrix[next_row][col].clone();
        for c in matrix[next_row].iter_mut() {
            *c /= &lead;
        }
        let pivot_row = matrix[next_row].clone();
        for (r, row) in matrix.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (a, b) in row.iter_mut().zip(pivot_row.iter()) {
                *a -= &factor * b;
            }
        }
        pivot_rows.push((next_row, col));
        next_row += 1;
    }
    // inconsistent if any remaining row is (0 … 0 | nonzero)
    for row in &matrix[next_row..] {
        if !row[unknowns].is_zero() {
            return None;
        }
    }
    let mut solution = vec![Rat::zero(); unknowns];
    for (row, col) in pivot_rows {
        solution[col] = matrix[row][unknowns].clone();
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn row(values: &[i64]) -> Vec<Rat> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(rank(vec![row(&[1, 0]), row(&[0, 1])]), 2);
        assert_eq!(rank(vec![row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rank(vec![row(&[0, 0])]), 0);
        assert_eq!(
            rank(vec![row(&[1, 2, 3]), row(&[4, 5, 6]), row(&[7, 8, 9])]),
            2
        );
    }

    #[test]
    fn solve_recovers_combinations() {
        let gens = vec![row(&[1, 0, 1]), row(&[0, 1, 1])];
        let sol = solve_combination(&gens, &row(&[2, 3, 5])).unwrap();
        assert_eq!(sol, row(&[2, 3]));
        assert!(solve_combination(&gens, &row(&[1, 0, 0])).is_none());
        // zero target: zero certificate
        assert_eq!(
            solve_combination(&gens, &row(&[0, 0, 0])).unwrap(),
            row(&[0, 0])
        );
    }

    #[test]
    fn solve_handles_dependent_generators() {
        let gens = vec![row(&[1, 1]), row(&[2, 2]), row(&[0, 1])];
        let target = row(&[3, 4]);
        let sol = solve_combination(&gens, &target).unwrap();
        let mut reconstructed = vec![Rat::zero(); 2];
        for (lambda, g) in sol.iter().zip(&gens) {
            for (acc, v) in reconstructed.iter_mut().zip(g) {
                *acc += lambda * v;
            }
        }
        assert_eq!(reconstructed, target);
    }

    #[test]
    fn reducer_membership() {
        let mut reducer = RowReducer::new();
        assert!(reducer.insert(row(&[1, 2, 0])));
        assert!(reducer.insert(row(&[0, 1, 1])));
        assert!(!reducer.insert(row(&[1, 3, 1])));
        assert!(reducer.contains(row(&[2, 5, 1])));
        assert!(!reducer.contains(row(&[0, 0, 1])));
    }
}
