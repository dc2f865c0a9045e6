pub mod catalog;
pub mod dgcore;
pub mod dgideal;
pub mod dgmod;
pub mod dgpoly;
pub mod exactla;
pub mod expr;
pub mod orelocal;
pub mod report;
