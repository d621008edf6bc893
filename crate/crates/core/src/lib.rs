//! Blocks of finite-dimensional representations of loop algebras.

pub mod drinfeld;
pub mod gamma;
pub mod linalg;
pub mod linking;
pub mod loop_modules;
pub mod oracle;
pub mod rootsys;
