pub mod characters;
pub mod cyclotomic;
pub mod fixtures;
pub mod group;
pub mod indicators;
pub mod perm;
pub mod verify;
