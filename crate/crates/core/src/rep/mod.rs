//! Representation theory of finite-dimensional algebras over GF(p^d), with
//! extra structure for the family algebras.

mod blocks;
mod family;
mod modules;
mod radical;

pub use blocks::{block_identify, blocks, blocks_with, equal_up_to_permutation, Block, BlockDecomposition, BlockTag};
pub use family::{
    all_characters, block_of, blocks_match_orbits, family_projectives, kernel_blocks, kx_decompose, subhopf_report,
    third_type_quotient, FamilyProjective, KernelBlock, SubhopfLayer, SubhopfProjective, SubhopfReport,
    ThirdTypeQuotient,
};
pub use modules::{
    analyze, analyze_seeded, cartan_matrix, composition_series, left_ideal_module, projective_covers,
    CompositionReport, ModulePresentation, RepData, SimpleModule, SPLIT_SEED,
};
pub use radical::{radical, radical_index};

#[cfg(test)]
mod tests;
