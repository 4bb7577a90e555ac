//! Block decomposition and Morita-invariant identification of blocks.

use serde::Serialize;

use super::modules::{analyze, cartan_matrix, projective_covers, RepData};
use crate::algebra::{Algebra, StructAlgebra};
use crate::error::Result;
use crate::families::taft;
use crate::field::Elem;
use crate::linalg::{split_idempotents, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Central primitive idempotent cutting out the block.
    pub idempotent: Vector,
    pub dim: usize,
    /// Indices into the simple list of the algebra.
    pub simples: Vec<usize>,
    /// Cartan matrix restricted to the block's simples.
    pub cartan: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub data: RepData,
    pub cartan: Vec<Vec<usize>>,
    pub blocks: Vec<Block>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockTag {
    TaftLike,
    MatrixLike,
    Other,
}

/// Central primitive idempotents of `A` and the simples of each block.
pub fn blocks(alg: &StructAlgebra) -> Result<BlockDecomposition> {
    let data = analyze(alg)?;
    blocks_with(alg, data)
}

pub fn blocks_with(alg: &StructAlgebra, data: RepData) -> Result<BlockDecomposition> {
    let f = alg.field();
    let center = alg.center();
    let idems = split_idempotents(alg, &alg.unit, center.basis())?;
    let projectives = projective_covers(alg, &data);
    let cartan = cartan_matrix(alg, &data, &projectives);
    let blocks = idems
        .into_iter()
        .map(|e| {
            let mut span = Subspace::zero(alg.dim);
            for i in 0..alg.dim {
                span.insert(f, &alg.mul(&alg.basis(i), &e));
            }
            let simples: Vec<usize> = data
                .simples
                .iter()
                .enumerate()
                .filter(|(_, s)| {
                    let m = s.module.act(f, &e);
                    m.data.iter().any(|x| !x.is_zero())
                })
                .map(|(k, _)| k)
                .collect();
            let cartan_b = simples.iter().map(|&i| simples.iter().map(|&j| cartan[i][j]).collect()).collect();
            Block { idempotent: e, dim: span.dim(), simples, cartan: cartan_b }
        })
        .collect();
    Ok(BlockDecomposition { data, cartan, blocks })
}

/// Whether two square matrices agree after a simultaneous permutation of
/// rows and columns.
pub fn equal_up_to_permutation(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    fn extend(a: &[Vec<usize>], b: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = perm.len();
        if k == a.len() {
            return true;
        }
        for cand in 0..b.len() {
            if used[cand] || a[k][k] != b[cand][cand] {
                continue;
            }
            let consistent = perm.iter().enumerate().all(|(i, &pi)| a[i][k] == b[pi][cand] && a[k][i] == b[cand][pi]);
            if consistent {
                used[cand] = true;
                perm.push(cand);
                if extend(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

/// Compares a block with the Taft algebra on `q` (order `N`) and with
/// `N x N` matrices through simple count, dimensions and Cartan matrix.
pub fn block_identify(alg: &StructAlgebra, dec: &BlockDecomposition, block: &Block, q: Elem) -> Result<BlockTag> {
    let f = alg.field();
    let big_n = f.mult_order(q).unwrap_or(0) as usize;
    let dims: Vec<usize> = block.simples.iter().map(|&k| dec.data.simples[k].module.dim).collect();
    if dims == [big_n] && block.cartan == [[1]] {
        return Ok(BlockTag::MatrixLike);
    }
    if dims.len() == big_n && dims.iter().all(|&d| d == 1) {
        let t = taft(alg.field.clone(), q)?;
        let reference = blocks(&t.alg)?;
        if equal_up_to_permutation(&block.cartan, &reference.cartan) {
            return Ok(BlockTag::TaftLike);
        }
    }
    Ok(BlockTag::Other)
}
