//! Row reduction of Pauli generator lists over F2 with phase tracking.

use crate::pauli::{pauli_mul, PauliString};

/// A symplectic column: the X or Z bit of one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Col {
    pub z: bool,
    pub qubit: usize,
}

impl Col {
    #[inline]
    pub fn get(self, p: &PauliString) -> bool {
        if self.z {
            p.z_bit(self.qubit)
        } else {
            p.x_bit(self.qubit)
        }
    }
}

/// `x_0 .. x_{n-1}, z_0 .. z_{n-1}`; earlier columns are more significant.
pub(crate) fn standard_order(n: usize) -> Vec<Col> {
    (0..n)
        .map(|q| Col { z: false, qubit: q })
        .chain((0..n).map(|q| Col { z: true, qubit: q }))
        .collect()
}

/// Columns of `first` (X then Z bits) ahead of every other column.
pub(crate) fn order_with_first(n: usize, first: &[usize]) -> Vec<Col> {
    let rest: Vec<usize> = (0..n).filter(|q| !first.contains(q)).collect();
    let mut cols = Vec::with_capacity(2 * n);
    for group in [first, &rest[..]] {
        cols.extend(group.iter().map(|&q| Col { z: false, qubit: q }));
        cols.extend(group.iter().map(|&q| Col { z: true, qubit: q }));
    }
    cols
}

pub(crate) struct Reduced {
    /// Nonzero rows in reduced row-echelon form, sorted by pivot.
    pub rows: Vec<PauliString>,
    /// Pivot position (index into the column order) of each row.
    pub pivots: Vec<usize>,
    /// Rows that reduced to a multiple of the identity.
    pub zero_rows: Vec<PauliString>,
}

/// Fully reduced row-echelon form under the given column order. Row operations are
/// left multiplications `row <- row * pivot_row`.
pub(crate) fn rref(rows: Vec<PauliString>, order: &[Col]) -> Reduced {
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for (ci, &col) in order.iter().enumerate() {
        let Some(found) = (rank..rows.len()).find(|&r| col.get(&rows[r])) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && col.get(row) {
                *row = pauli_mul(row, &pivot_row).expect("rows share a size");
            }
        }
        pivots.push(ci);
        rank += 1;
    }
    let zero_rows = rows.split_off(rank);
    Reduced {
        rows,
        pivots,
        zero_rows,
    }
}

/// Reduces `v` against a reduced basis, returning the residual.
pub(crate) fn reduce_against(v: &PauliString, basis: &[PauliString], pivots: &[usize], order: &[Col]) -> PauliString {
    let mut v = v.clone();
    for (row, &p) in basis.iter().zip(pivots) {
        if order[p].get(&v) {
            v = pauli_mul(&v, row).expect("rows share a size");
        }
    }
    v
}
