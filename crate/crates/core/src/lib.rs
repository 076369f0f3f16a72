pub mod automata;
pub mod classify;
pub mod cli;
pub mod fixtures;
pub mod involution;
pub mod logic;
pub mod ltt;
