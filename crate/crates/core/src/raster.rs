//! Owned raster buffers: 3-channel images, single-channel planes, and
//! boolean masks, plus lossless PNG ingestion.

use std::path::Path;

use crate::color::{ColorSpaceTag, Pixel8};

#[derive(Debug, thiserror::Error)]
pub enum RasterError {
    #[error("image dimensions must be at least 1x1, got {width}x{height}")]
    EmptyDimensions { width: usize, height: usize },
    #[error("buffer length {got} does not match {width}x{height}")]
    LengthMismatch { width: usize, height: usize, got: usize },
    #[error("expected {expected} image, got {got}")]
    TagMismatch { expected: ColorSpaceTag, got: ColorSpaceTag },
    #[error("mask dimensions {mask_w}x{mask_h} do not match image {img_w}x{img_h}")]
    MaskMismatch { mask_w: usize, mask_h: usize, img_w: usize, img_h: usize },
    #[error("failed to read frame {path}: {source}")]
    Decode { path: String, source: image::ImageError },
    #[error("failed to write {path}: {source}")]
    Encode { path: String, source: image::ImageError },
}

/// Row-major 8-bit 3-channel raster tagged with its color space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Image {
    width: usize,
    height: usize,
    space: ColorSpaceTag,
    data: Vec<Pixel8>,
}

impl Image {
    pub fn new(
        width: usize,
        height: usize,
        space: ColorSpaceTag,
        data: Vec<Pixel8>,
    ) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::EmptyDimensions { width, height });
        }
        if data.len() != width * height {
            return Err(RasterError::LengthMismatch { width, height, got: data.len() });
        }
        Ok(Image { width, height, space, data })
    }

    pub fn filled(width: usize, height: usize, space: ColorSpaceTag, px: Pixel8) -> Self {
        Image::new(width, height, space, vec![px; width * height]).expect("nonzero dims")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn space(&self) -> ColorSpaceTag {
        self.space
    }

    pub fn pixels(&self) -> &[Pixel8] {
        &self.data
    }

    pub fn pixels_mut(&mut self) -> &mut [Pixel8] {
        &mut self.data
    }

    pub fn get(&self, x: usize, y: usize) -> Pixel8 {
        debug_assert!(x < self.width && y < self.height);
        self.data[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, px: Pixel8) {
        debug_assert!(x < self.width && y < self.height);
        self.data[y * self.width + x] = px;
    }

    pub fn expect_space(&self, expected: ColorSpaceTag) -> Result<(), RasterError> {
        if self.space != expected {
            return Err(RasterError::TagMismatch { expected, got: self.space });
        }
        Ok(())
    }

    /// Per-pixel conversion into another space, retagging the result.
    pub fn converted(&self, target: ColorSpaceTag, f: impl Fn(Pixel8) -> Pixel8) -> Image {
        Image {
            width: self.width,
            height: self.height,
            space: target,
            data: self.data.iter().map(|&p| f(p)).collect(),
        }
    }

    /// Extracts one channel as a grayscale plane.
    pub fn plane(&self, channel: usize) -> Gray {
        assert!(channel < 3);
        Gray {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|p| p.0[channel]).collect(),
        }
    }

    pub fn load_png(path: &Path) -> Result<Image, RasterError> {
        let img = image::open(path)
            .map_err(|source| RasterError::Decode { path: path.display().to_string(), source })?
            .into_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let data = img.pixels().map(|p| Pixel8(p.0)).collect();
        Image::new(w, h, ColorSpaceTag::Rgb, data)
    }

    pub fn save_png(&self, path: &Path) -> Result<(), RasterError> {
        let mut buf = image::RgbImage::new(self.width as u32, self.height as u32);
        for (i, px) in self.data.iter().enumerate() {
            let (x, y) = ((i % self.width) as u32, (i / self.width) as u32);
            buf.put_pixel(x, y, image::Rgb(px.0));
        }
        buf.save(path)
            .map_err(|source| RasterError::Encode { path: path.display().to_string(), source })
    }
}

/// Single-channel 8-bit plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gray {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl Gray {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::EmptyDimensions { width, height });
        }
        if data.len() != width * height {
            return Err(RasterError::LengthMismatch { width, height, got: data.len() });
        }
        Ok(Gray { width, height, data })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        self.data[y * self.width + x] = v;
    }
}

/// Boolean selection mask; `true` means the pixel is selected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl Mask {
    pub fn filled(width: usize, height: usize, value: bool) -> Self {
        Mask { width, height, bits: vec![value; width * height] }
    }

    pub fn from_bits(width: usize, height: usize, bits: Vec<bool>) -> Result<Self, RasterError> {
        if bits.len() != width * height {
            return Err(RasterError::LengthMismatch { width, height, got: bits.len() });
        }
        Ok(Mask { width, height, bits })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.bits[y * self.width + x] = v;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn matches(&self, img: &Image) -> Result<(), RasterError> {
        if self.width != img.width() || self.height != img.height() {
            return Err(RasterError::MaskMismatch {
                mask_w: self.width,
                mask_h: self.height,
                img_w: img.width(),
                img_h: img.height(),
            });
        }
        Ok(())
    }

    /// In-place intersection with another mask of the same dimensions.
    pub fn intersect(&mut self, other: &Mask) {
        assert_eq!(self.width, other.width);
        assert_eq!(self.height, other.height);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= *b;
        }
    }
}

/// Reflect-101 border indexing: `-1 -> 1`, `n -> n-2`.
pub fn reflect101(i: isize, n: usize) -> usize {
    let n = n as isize;
    if n == 1 {
        return 0;
    }
    let period = 2 * n - 2;
    let mut r = i.rem_euclid(period);
    if r >= n {
        r = period - r;
    }
    r as usize
}
