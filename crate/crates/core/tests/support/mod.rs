#![allow(dead_code)]

pub mod complexes;
pub mod golden;
pub mod taylor;
