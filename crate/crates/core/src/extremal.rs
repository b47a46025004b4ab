//! Extremal families on which the independent-isolation bounds are tight.
//!
//! `G(t, s)` for clique order `k`: `t` mutually adjacent centers
//! `x₁ … x_t`; center `xᵢ` owns `s` disjoint copies `K^{i,1} … K^{i,s}` of
//! `K_k` and is joined to one vertex `y_{i,i'}` of each. Here
//! `ι_k = t` and `ι'_k = s(t−1)+1`.
//!
//! Vertex numbering inside one copy: centers `0..t`, then block `(i, i')`
//! occupies `t + (i·s + i')·k ..` with `y_{i,i'}` its first vertex. Copies
//! are laid out consecutively; connecting path vertices come last.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// A single `G(t, s)`.
    Gts,
    /// `ℓ` disjoint copies of `G(t, t²−t+1)`.
    Tilde,
    /// The copies of [`Family::Tilde`] chained by paths.
    Hat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub family: Family,
    pub t: usize,
    pub s: usize,
    pub k: usize,
    pub copies: usize,
    /// Edges on each connecting path (only for [`Family::Hat`]).
    pub path_len: Option<usize>,
}

/// Labels of one `G(t, s)` copy inside the generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CopyLayout {
    pub centers: Vec<usize>,
    /// `attachments[i][i']` is `y_{i,i'}`.
    pub attachments: Vec<Vec<usize>>,
    /// `clique_blocks[i][i']` lists the vertices of `K^{i,i'}`.
    pub clique_blocks: Vec<Vec<Vec<usize>>>,
}

/// Values the construction is known to attain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Targets {
    pub iota: usize,
    pub iota_independent: usize,
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledExtremal {
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub params: ExtremalParams,
    pub layout: Vec<CopyLayout>,
    /// Internal vertices of each connecting path, in path order.
    pub path_internals: Vec<Vec<usize>>,
    pub targets: Targets,
}

fn copy_size(t: usize, s: usize, k: usize) -> usize {
    t + t * s * k
}

fn build_copy(offset: usize, t: usize, s: usize, k: usize, edges: &mut Vec<(usize, usize)>) -> CopyLayout {
    let centers: Vec<_> = (0..t).map(|i| offset + i).collect();
    for (a, &u) in centers.iter().enumerate() {
        for &v in &centers[a + 1..] {
            edges.push((u, v));
        }
    }
    let mut attachments = Vec::with_capacity(t);
    let mut clique_blocks = Vec::with_capacity(t);
    for (i, &center) in centers.iter().enumerate() {
        let mut ys = Vec::with_capacity(s);
        let mut blocks = Vec::with_capacity(s);
        for j in 0..s {
            let start = offset + t + (i * s + j) * k;
            let block: Vec<_> = (start..start + k).collect();
            for (a, &u) in block.iter().enumerate() {
                for &v in &block[a + 1..] {
                    edges.push((u, v));
                }
            }
            edges.push((center, start));
            ys.push(start);
            blocks.push(block);
        }
        attachments.push(ys);
        clique_blocks.push(blocks);
    }
    CopyLayout { centers, attachments, clique_blocks }
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

/// `G(t, s)` with clique order `k`; requires `s + t − 1 >= k`.
pub fn gen_gts(t: usize, s: usize, k: usize) -> Result<LabeledExtremal> {
    positive("t", t)?;
    positive("s", s)?;
    positive("k", k)?;
    if s + t - 1 < k {
        return Err(Error::InvalidParameter(format!("need s + t - 1 >= k, got s={s}, t={t}, k={k}")));
    }
    let mut edges = Vec::new();
    let layout = build_copy(0, t, s, k, &mut edges);
    let n = copy_size(t, s, k);
    Ok(LabeledExtremal {
        graph: Graph::from_edges(n, &edges)?,
        n,
        params: ExtremalParams { family: Family::Gts, t, s, k, copies: 1, path_len: None },
        layout: vec![layout],
        path_internals: Vec::new(),
        targets: Targets { iota: t, iota_independent: s * (t - 1) + 1, max_degree: s + t - 1 },
    })
}

type Parts = (usize, Vec<CopyLayout>, Vec<(usize, usize)>);

fn tilde_parts(t: usize, ell: usize, k: usize) -> Result<Parts> {
    positive("t", t)?;
    positive("ell", ell)?;
    positive("k", k)?;
    if t * t < k {
        return Err(Error::InvalidParameter(format!("need t^2 >= k, got t={t}, k={k}")));
    }
    let s = t * t - t + 1;
    let size = copy_size(t, s, k);
    let mut edges = Vec::new();
    let layout = (0..ell).map(|c| build_copy(c * size, t, s, k, &mut edges)).collect();
    Ok((s, layout, edges))
}

fn tilde_targets(t: usize, ell: usize) -> Targets {
    Targets { iota: t * ell, iota_independent: (t * t * t + 2 * t - 2 * t * t) * ell, max_degree: t * t }
}

/// `ℓ` disjoint copies of `G(t, t²−t+1)`; requires `t² >= k`.
pub fn gen_tilde(t: usize, ell: usize, k: usize) -> Result<LabeledExtremal> {
    let (s, layout, edges) = tilde_parts(t, ell, k)?;
    let n = ell * copy_size(t, s, k);
    Ok(LabeledExtremal {
        graph: Graph::from_edges(n, &edges)?,
        n,
        params: ExtremalParams { family: Family::Tilde, t, s, k, copies: ell, path_len: None },
        layout,
        path_internals: Vec::new(),
        targets: tilde_targets(t, ell),
    })
}

/// Connected variant of [`gen_tilde`]: for each `j`, a path with `path_len`
/// edges joins the last vertex of `K^{t,s}` in copy `j` to the last vertex of
/// `K^{1,1}` in copy `j + 1`. Requires `k >= 3`, `ℓ >= 2`, `path_len >= 4`.
pub fn gen_hat(t: usize, ell: usize, k: usize, path_len: usize) -> Result<LabeledExtremal> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("the connected family needs k >= 3, got {k}")));
    }
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("the connected family needs at least 2 copies, got {ell}")));
    }
    if path_len < 4 {
        return Err(Error::InvalidParameter(format!("connecting paths need length >= 4, got {path_len}")));
    }
    let (s, layout, mut edges) = tilde_parts(t, ell, k)?;
    let mut next = ell * copy_size(t, s, k);
    let mut path_internals = Vec::with_capacity(ell - 1);
    for pair in layout.windows(2) {
        let from = *pair[0].clique_blocks[t - 1][s - 1].last().expect("k >= 3");
        let to = *pair[1].clique_blocks[0][0].last().expect("k >= 3");
        let internals: Vec<_> = (next..next + path_len - 1).collect();
        next += path_len - 1;
        let mut prev = from;
        for &v in internals.iter().chain(std::iter::once(&to)) {
            edges.push((prev, v));
            prev = v;
        }
        path_internals.push(internals);
    }
    Ok(LabeledExtremal {
        graph: Graph::from_edges(next, &edges)?,
        n: next,
        params: ExtremalParams { family: Family::Hat, t, s, k, copies: ell, path_len: Some(path_len) },
        layout,
        path_internals,
        targets: tilde_targets(t, ell),
    })
}
