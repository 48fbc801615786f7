//! Per-image processing primitives: range masks, highlight inpainting,
//! CLAHE, bilateral filtering, adaptive thresholding, and histogramming.
//!
//! Every kernel is a pure function of its inputs and is independent of
//! pixel visitation order; outputs are bit-identical across thread counts.

mod bilateral;
mod clahe;
mod histogram;
mod inpaint;
mod masks;
mod threshold;

pub use bilateral::bilateral_filter;
pub use clahe::clahe_l_channel;
pub use histogram::rgb_histogram;
pub use inpaint::inpaint_telea;
pub use masks::{dynamic_hsv_bounds, hsv_range_mask, near_black_mask, HsvBounds};
pub use threshold::adaptive_threshold_gaussian;

use crate::raster::RasterError;

#[derive(Debug, thiserror::Error)]
pub enum KernelError {
    #[error(transparent)]
    Raster(#[from] RasterError),
    #[error("percentiles must satisfy 0 <= lo <= hi <= 1, got ({lo}, {hi})")]
    BadPercentiles { lo: f64, hi: f64 },
    #[error("inpaint radius must be >= 1")]
    BadRadius,
    #[error("hole mask covers the entire image; nothing to propagate from")]
    AllHoles,
    #[error("clip limit must be positive, got {0}")]
    BadClipLimit(f64),
    #[error("tile grid must be at least 1x1, got {0}x{1}")]
    BadTileGrid(usize, usize),
    #[error("bilateral diameter must be odd and >= 1, got {0}")]
    BadDiameter(usize),
    #[error("sigma values must be positive")]
    BadSigma,
    #[error("block size must be odd and >= 3, got {0}")]
    BadBlockSize(usize),
    #[error("bounds must satisfy lo <= hi channelwise")]
    BadBounds,
}
