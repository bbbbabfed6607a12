//! Breadth-first generation checks in `Z^n x| S_n`.
//!
//! The group is infinite, so the search is capped by a number of visited
//! elements. It reports which permutation parts were reached and the integer
//! lattice spanned by the pure translations it met.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::semidirect::SemiElement;
use crate::{Error, IntVector, Permutation, Result};

/// Hard ceiling on the element budget.
pub const MAX_ELEMENTS: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct ClosureSummary {
    pub n: usize,
    /// Elements visited, including the identity.
    pub visited: BTreeSet<SemiElement>,
    /// Distinct permutation parts among visited elements.
    pub permutations: BTreeSet<Permutation>,
    /// Hermite-reduced basis of the lattice spanned by visited translations.
    pub translation_basis: TranslationLattice,
    /// The search stopped because the frontier emptied (the generated group is
    /// finite and fully listed).
    pub exhausted: bool,
    /// The search stopped on the element budget.
    pub budget_hit: bool,
}

impl ClosureSummary {
    pub fn contains(&self, g: &SemiElement) -> bool {
        self.visited.contains(g)
    }

    pub fn reaches_all_permutations(&self) -> bool {
        let factorial: usize = (1..=self.n).product();
        self.permutations.len() == factorial
    }

    pub fn translation_rank(&self) -> usize {
        self.translation_basis.rank()
    }

    pub fn translations_span_everything(&self) -> bool {
        self.translation_basis.is_full_lattice()
    }
}

/// Breadth-first closure of `{e}` under right multiplication by the images and
/// their inverses, stopping once `max_elements` elements have been visited.
pub fn generated_closure(images: &[SemiElement], max_elements: usize) -> Result<ClosureSummary> {
    let n = images
        .first()
        .map(SemiElement::n)
        .ok_or_else(|| Error::InvalidArgument("no generator images".into()))?;
    if max_elements == 0 || max_elements > MAX_ELEMENTS {
        return Err(Error::Budget(alloc::format!(
            "element budget must be in 1..={MAX_ELEMENTS}, got {max_elements}"
        )));
    }
    let mut steps = Vec::with_capacity(images.len() * 2);
    for g in images {
        Error::check_len(n, g.n())?;
        let inv = g.inverse()?;
        for h in [g.clone(), inv] {
            if !steps.contains(&h) {
                steps.push(h);
            }
        }
    }

    let identity = SemiElement::identity(n);
    let mut lattice = TranslationLattice::new(n);
    let mut permutations = BTreeSet::new();
    permutations.insert(identity.s.clone());
    let mut visited = BTreeSet::new();
    visited.insert(identity.clone());
    let mut frontier = alloc::vec![identity];
    let mut budget_hit = false;

    'search: while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for step in &steps {
                if visited.len() >= max_elements {
                    budget_hit = true;
                    break 'search;
                }
                let y = x.mul(step)?;
                if visited.contains(&y) {
                    continue;
                }
                if y.is_translation() {
                    lattice.insert(&y.z)?;
                }
                permutations.insert(y.s.clone());
                visited.insert(y.clone());
                next.push(y);
            }
        }
        frontier = next;
    }

    Ok(ClosureSummary {
        n,
        exhausted: frontier.is_empty() && !budget_hit,
        budget_hit,
        visited,
        permutations,
        translation_basis: lattice,
    })
}

/// Integer row-echelon basis of a sublattice of `Z^n`, kept reduced as vectors
/// are inserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationLattice {
    n: usize,
    // rows sorted by pivot column; pivot entries positive
    rows: Vec<Vec<i128>>,
}

impl TranslationLattice {
    pub fn new(n: usize) -> Self {
        TranslationLattice { n, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    /// Full rank with unit pivots, i.e. the lattice is all of `Z^n`.
    pub fn is_full_lattice(&self) -> bool {
        self.rank() == self.n && self.rows.iter().enumerate().all(|(i, r)| r[i] == 1)
    }

    /// Index of the lattice in `Z^n` when full rank: the product of pivots.
    pub fn index(&self) -> Option<i128> {
        (self.rank() == self.n).then(|| self.rows.iter().enumerate().map(|(i, r)| r[i]).product())
    }

    pub fn insert(&mut self, v: &IntVector) -> Result<()> {
        Error::check_len(self.n, v.len())?;
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut row_index = 0;
        for col in 0..self.n {
            if v[col] == 0 {
                if row_index < self.rows.len() && pivot(&self.rows[row_index]) == col {
                    row_index += 1;
                }
                continue;
            }
            if row_index < self.rows.len() && pivot(&self.rows[row_index]) == col {
                let row = &mut self.rows[row_index];
                combine(row, &mut v, col)?;
                row_index += 1;
            } else {
                normalise_sign(&mut v, col);
                self.rows.insert(row_index, v);
                self.reduce()?;
                return Ok(());
            }
        }
        self.reduce()
    }

    // Reduce entries above each pivot into [0, pivot).
    fn reduce(&mut self) -> Result<()> {
        for i in 0..self.rows.len() {
            let col = pivot(&self.rows[i]);
            let p = self.rows[i][col];
            for k in 0..i {
                let q = self.rows[k][col].div_euclid(p);
                if q != 0 {
                    for c in col..self.n {
                        let delta = q.checked_mul(self.rows[i][c]).ok_or(Error::Overflow)?;
                        self.rows[k][c] = self.rows[k][c].checked_sub(delta).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn pivot(row: &[i128]) -> usize {
    row.iter().position(|&x| x != 0).unwrap_or(row.len())
}

fn normalise_sign(v: &mut [i128], col: usize) {
    if v[col] < 0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Unimodular combination of `row` and `v` leaving `gcd` in `row[col]` and zero
/// in `v[col]`.
fn combine(row: &mut [i128], v: &mut [i128], col: usize) -> Result<()> {
    let (g, x, y) = extended_gcd(row[col], v[col]);
    let (a, b) = (row[col] / g, v[col] / g);
    for c in 0..row.len() {
        let (r, w) = (row[c], v[c]);
        let new_row = x
            .checked_mul(r)
            .zip(y.checked_mul(w))
            .and_then(|(p, q)| p.checked_add(q))
            .ok_or(Error::Overflow)?;
        let new_v = a
            .checked_mul(w)
            .zip(b.checked_mul(r))
            .and_then(|(p, q)| p.checked_sub(q))
            .ok_or(Error::Overflow)?;
        row[c] = new_row;
        v[c] = new_v;
    }
    normalise_sign(row, col);
    Ok(())
}

/// `(g, x, y)` with `g = gcd(a, b) > 0` and `a x + b y = g`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}
