pub mod correlate;
pub mod figure1;
pub mod props;
pub mod verify;
