pub mod benford;
pub mod carnot;
pub mod entropy;
pub mod modes;
pub mod powerlaw;
pub mod simulate;
