"""Data format table used by the POCME primary-format checks."""

from __future__ import annotations

import re
from typing import Literal

FormatClass = Literal["open", "proprietary"]

# Openly specified formats, keyed by extension, MIME subtype or common name.
OPEN_FORMATS = frozenset(
    {
        "ascii", "bz2", "cdf", "csv", "fasta", "fastq", "fits", "flac", "geojson", "geotiff", "gml", "gpx",
        "grib", "grib2", "gz", "gzip", "h5", "hdf", "hdf4", "hdf5", "html", "jpeg", "jpg", "json", "jsonld",
        "kml", "kmz", "las", "laz", "markdown", "md", "mzml", "nc", "netcdf", "nexus", "nifti", "nii", "nt",
        "odp", "ods", "odt", "ogg", "opendocument", "parquet", "pdf", "plain", "png", "rdf", "sam", "svg",
        "tar", "text", "tif", "tiff", "ttl", "turtle", "tsv", "txt", "vcf", "wav", "xml", "yaml", "yml",
        "zarr", "zip", "dicom", "dcm", "bam", "cram", "sql", "sqlite", "ply", "obj", "stl", "webp",
    }
)  # fmt: skip

# Widespread formats tied to one vendor.
PROPRIETARY_FORMATS = frozenset(
    {
        "accdb", "doc", "docx", "dta", "dwg", "excel", "ibw", "lvm", "mat", "matlab", "mdb", "msword",
        "opj", "ppt", "pptx", "psd", "sas7bdat", "sav", "shp", "spss", "stata", "tdms", "word", "xls",
        "xlsx", "powerpoint", "spe", "raw", "mrc", "czi", "lif", "nd2",
    }
)  # fmt: skip

_PROPRIETARY_MIME = re.compile(r"openxmlformats|ms-excel|msword|ms-powerpoint|ms-access", re.IGNORECASE)
_OPEN_MIME = re.compile(r"opendocument", re.IGNORECASE)
_TOKEN = re.compile(r"[a-z0-9]+(?:[+][a-z0-9]+)?")


def _tokens(text: str) -> list[str]:
    text = text.strip().lower().split(";", 1)[0]
    if "/" in text and " " not in text:
        subtype = text.rsplit("/", 1)[1]
        for prefix in ("x-", "vnd."):
            subtype = subtype.removeprefix(prefix)
        text = subtype
    tokens: list[str] = []
    for token in _TOKEN.findall(text):
        tokens.append(token)
        tokens.extend(t for t in token.split("+") if t != token)
    return tokens


def classify_format(text: str) -> FormatClass | None:
    """Classify a declared format (MIME type, extension or name).

    Returns:
        ``"open"``, ``"proprietary"`` or None when the format is not known.
    """
    if _PROPRIETARY_MIME.search(text):
        return "proprietary"
    if _OPEN_MIME.search(text):
        return "open"
    tokens = _tokens(text)
    if any(token in PROPRIETARY_FORMATS for token in tokens):
        return "proprietary"
    if any(token in OPEN_FORMATS for token in tokens):
        return "open"
    return None
