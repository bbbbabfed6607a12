use alloc::vec::Vec;

use super::{coordinate_matrices, permutohedron_vertices, tile_halfspaces, MAX_GEOMETRY_N};
use crate::{CycleStructure, Error, IntVector, Permutation, Result};

/// Largest `n` accepted by [`generate_patch`].
pub const MAX_PATCH_N: usize = 4;
/// Largest max-norm radius accepted by [`generate_patch`].
pub const MAX_PATCH_RADIUS: u32 = 4;
/// Largest `n` accepted by [`product_tile_vertices`].
pub const MAX_PRODUCT_N: usize = 6;

/// One translate of the base prism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismTile {
    /// Coefficients of `e_1, .., e_{n-1}, a`.
    pub t: IntVector,
    /// The `n!` permutohedron vertices (lexicographic), then their `a`-shifts,
    /// all translated by `C t`.
    pub vertices: Vec<IntVector>,
}

impl PrismTile {
    pub fn new(t: IntVector) -> Result<Self> {
        let n = t.len();
        Error::check_size(n, 2, MAX_GEOMETRY_N)?;
        let offset = coordinate_matrices(n)?.apply(&t)?;
        let vertices = base_vertices(n)?
            .iter()
            .map(|v| v.checked_add(&offset))
            .collect::<Result<_>>()?;
        Ok(PrismTile { t, vertices })
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }
}

/// Vertices of the base prism: permutations of `(1..n)`, then the same plus `a`.
pub(crate) fn base_vertices(n: usize) -> Result<Vec<IntVector>> {
    let bottom = permutohedron_vertices(n)?;
    let a = IntVector::constant(n, 1);
    let top = bottom
        .iter()
        .map(|v| v.checked_add(&a))
        .collect::<Result<Vec<_>>>()?;
    Ok(bottom.into_iter().chain(top).collect())
}

/// All tiles `C t` with `max |t_i| <= radius`, in lexicographic order of `t`.
pub fn generate_patch(n: usize, radius: u32) -> Result<Vec<PrismTile>> {
    Error::check_size(n, 2, MAX_PATCH_N)?;
    if radius > MAX_PATCH_RADIUS {
        return Err(Error::Budget(alloc::format!(
            "patch radius {radius} exceeds {MAX_PATCH_RADIUS}"
        )));
    }
    let r = radius as i64;
    lattice_box(&alloc::vec![(-r, r); n])
        .map(|t| PrismTile::new(t.into()))
        .collect()
}

/// Every integer vector in the product of the closed ranges, lexicographic.
pub(crate) fn lattice_box(ranges: &[(i64, i64)]) -> impl Iterator<Item = Vec<i64>> + '_ {
    let empty = ranges.iter().any(|&(lo, hi)| lo > hi);
    let mut current: Option<Vec<i64>> = (!empty).then(|| ranges.iter().map(|r| r.0).collect());
    core::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = ranges.len();
        current = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if next[i] < ranges[i].1 {
                next[i] += 1;
                break Some(next);
            }
            next[i] = ranges[i].0;
        };
        Some(out)
    })
}

/// The two-dimensional faces of the base prism as cyclically ordered indices
/// into [`PrismTile::vertices`], for `n ∈ {2, 3}`.
///
/// For `n = 2` the prism is a square and the single face is the square itself;
/// for `n = 3` it is a hexagonal prism with six rectangles and two hexagons.
/// Faces are oriented counter-clockwise seen from outside (for `n = 2`, seen
/// from `+z` after embedding in the plane `z = 0`).
pub fn polygon_faces(n: usize) -> Result<Vec<Vec<usize>>> {
    Error::check_size(n, 2, 3)?;
    let system = tile_halfspaces(n)?;
    let vertices = base_vertices(n)?;
    let incidence: Vec<Vec<usize>> = vertices.iter().map(|v| system.tight_facets(v, 1)).collect();
    let facets: Vec<_> = system
        .sides
        .iter()
        .chain([&system.lower, &system.upper])
        .collect();

    let shares = |u: usize, v: usize, except: Option<usize>| {
        incidence[u]
            .iter()
            .any(|f| Some(*f) != except && incidence[v].contains(f))
    };

    let mut faces = Vec::new();
    if n == 2 {
        let all: Vec<usize> = (0..vertices.len()).collect();
        let mut cycle = order_cycle(&all, |u, v| shares(u, v, None))?;
        if signed_area_2d(&vertices, &cycle) < 0 {
            cycle.reverse();
        }
        faces.push(cycle);
    } else {
        for (f, h) in facets.iter().enumerate() {
            let members: Vec<usize> = (0..vertices.len())
                .filter(|&v| incidence[v].contains(&f))
                .collect();
            if members.len() < 3 {
                continue;
            }
            let mut cycle = order_cycle(&members, |u, v| shares(u, v, Some(f)))?;
            // inward normal is h.coeffs; outward-facing CCW means normal · coeffs < 0
            let normal = cross(&vertices, &cycle);
            let dot: i64 = normal.iter().zip(&h.coeffs).map(|(a, b)| a * b).sum();
            if dot > 0 {
                cycle.reverse();
            }
            faces.push(cycle);
        }
    }
    Ok(faces)
}

fn order_cycle(members: &[usize], adjacent: impl Fn(usize, usize) -> bool) -> Result<Vec<usize>> {
    let broken = || Error::InvalidArgument("face vertices do not form a cycle".into());
    let mut cycle = alloc::vec![members[0]];
    while cycle.len() < members.len() {
        let last = *cycle.last().expect("nonempty");
        let next = members
            .iter()
            .copied()
            .find(|&v| !cycle.contains(&v) && adjacent(last, v))
            .ok_or_else(broken)?;
        cycle.push(next);
    }
    if !adjacent(cycle[0], *cycle.last().expect("nonempty")) {
        return Err(broken());
    }
    Ok(cycle)
}

fn signed_area_2d(vertices: &[IntVector], cycle: &[usize]) -> i64 {
    (0..cycle.len())
        .map(|i| {
            let (p, q) = (&vertices[cycle[i]], &vertices[cycle[(i + 1) % cycle.len()]]);
            p[0] * q[1] - p[1] * q[0]
        })
        .sum()
}

// Newell normal of a planar polygon in R^3.
fn cross(vertices: &[IntVector], cycle: &[usize]) -> [i64; 3] {
    let mut normal = [0i64; 3];
    for i in 0..cycle.len() {
        let (p, q) = (&vertices[cycle[i]], &vertices[cycle[(i + 1) % cycle.len()]]);
        normal[0] += (p[1] - q[1]) * (p[2] + q[2]);
        normal[1] += (p[2] - q[2]) * (p[0] + q[0]);
        normal[2] += (p[0] - q[0]) * (p[1] + q[1]);
    }
    normal
}

/// Vertices of the product polytope attached to an arbitrary action `tau`:
/// one prism over a permutohedron per cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTile {
    pub cycles: Vec<Vec<usize>>,
    /// Dimension `|cycle| - 1` of each permutohedron factor.
    pub permutohedron_dims: Vec<usize>,
    /// Number of interval factors, one per cycle.
    pub intervals: usize,
    /// Cartesian product of the per-cycle prism vertices, written in `Z^n`
    /// through the cycle labeling: the `j`-th point of a cycle receives the
    /// `j`-th coordinate of that cycle's vertex.
    pub vertices: Vec<IntVector>,
}

pub fn product_tile_vertices(tau: &Permutation) -> Result<ProductTile> {
    let n = tau.len();
    Error::check_size(n, 1, MAX_PRODUCT_N)?;
    let structure = CycleStructure::of(tau);
    let per_cycle = structure
        .cycles()
        .iter()
        .map(|c| cycle_prism_vertices(c.len()))
        .collect::<Result<Vec<_>>>()?;

    let mut vertices = alloc::vec![alloc::vec![0i64; n]];
    for (cycle, options) in structure.cycles().iter().zip(&per_cycle) {
        vertices = vertices
            .iter()
            .flat_map(|partial| {
                options.iter().map(move |local| {
                    let mut v = partial.clone();
                    for (&w, &x) in cycle.iter().zip(local.iter()) {
                        v[w - 1] = x;
                    }
                    v
                })
            })
            .collect();
    }
    Ok(ProductTile {
        cycles: structure.cycles().to_vec(),
        permutohedron_dims: structure.lengths().iter().map(|m| m - 1).collect(),
        intervals: structure.cycles().len(),
        vertices: vertices.into_iter().map(IntVector::new).collect(),
    })
}

fn cycle_prism_vertices(m: usize) -> Result<Vec<IntVector>> {
    if m == 1 {
        Ok(alloc::vec![IntVector::from([1]), IntVector::from([2])])
    } else {
        base_vertices(m)
    }
}
