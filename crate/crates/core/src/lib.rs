pub mod catalog;
pub mod cli;
pub mod hankel;
pub mod quad;
pub mod specfun;
pub mod verify;
