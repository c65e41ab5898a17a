"""Canned DataCite, handle and re3data responses used by several test modules."""

from __future__ import annotations

DOI = "10.5281/zenodo.1234"
LANDING = "https://data.example.org/records/1234"
HANDLE_API = f"https://doi.org/api/handles/{DOI}"
DATACITE_URL = f"https://api.datacite.org/dois/{DOI}"
DATACITE_ACCEPT = "application/vnd.api+json"
REGISTRY_SEARCH = "https://www.re3data.org/api/beta/repositories?query=data.example.org"
REGISTRY_RECORD = "https://www.re3data.org/api/v1/repository/r3d100000001"

FULL_ATTRIBUTES = {
    "doi": DOI,
    "url": LANDING,
    "creators": [{"name": "Doe, Alex"}],
    "titles": [{"title": "Soil moisture at station 7"}],
    "publisher": {"name": "Example Data Centre"},
    "publicationYear": 2023,
    "types": {"resourceTypeGeneral": "Dataset"},
    "subjects": [{"subject": "soil science"}],
    "contributors": [{"name": "Roe, Sam"}],
    "dates": [{"date": "2023-01-01", "dateType": "Collected"}],
    "relatedIdentifiers": [{"relatedIdentifier": "10.1234/article", "relationType": "IsCitedBy"}],
    "descriptions": [{"description": "Hourly soil moisture.", "descriptionType": "Abstract"}],
    "geoLocations": [{"geoLocationPlace": "Station 7"}],
    "language": "en",
    "identifiers": [{"identifier": "station-7", "identifierType": "local"}],
    "sizes": ["12 MB"],
    "formats": ["text/csv", "application/x-netcdf"],
    "version": "1.0",
    "rightsList": [
        {
            "rights": "Creative Commons Attribution 4.0 International",
            "rightsUri": "https://creativecommons.org/licenses/by/4.0/legalcode",
            "rightsIdentifier": "cc-by-4.0",
        }
    ],
    "fundingReferences": [{"funderName": "Example Foundation"}],
}

SEARCH_XML = """<?xml version="1.0" encoding="UTF-8"?>
<list>
  <repository>
    <id>r3d100000001</id>
    <doi>https://doi.org/10.17616/R3XXXX</doi>
    <name>Example Data Centre</name>
  </repository>
</list>
"""

RECORD_XML = """<?xml version="1.0" encoding="UTF-8"?>
<r3d:re3data xmlns:r3d="http://www.re3data.org/schema/2-2">
  <r3d:repository>
    <r3d:re3data.orgIdentifier>r3d100000001</r3d:re3data.orgIdentifier>
    <r3d:repositoryName language="eng">Example Data Centre</r3d:repositoryName>
    <r3d:repositoryURL>https://data.example.org/</r3d:repositoryURL>
    <r3d:databaseAccess>
      <r3d:databaseAccessType>open</r3d:databaseAccessType>
    </r3d:databaseAccess>
    <r3d:dataLicense>
      <r3d:dataLicenseName>CC</r3d:dataLicenseName>
      <r3d:dataLicenseURL>https://creativecommons.org/licenses/by/4.0/</r3d:dataLicenseURL>
    </r3d:dataLicense>
    <r3d:versioning>yes</r3d:versioning>
    <r3d:pidSystem>DOI</r3d:pidSystem>
  </r3d:repository>
</r3d:re3data>
"""


def seed_datacite_record(seed, attributes=None, *, xml=True):
    """A resolving DOI with a DataCite record; with ``xml`` the landing page host is listed in re3data."""
    seed(HANDLE_API, {"responseCode": 1, "handle": DOI})
    seed(DATACITE_URL, {"data": {"id": DOI, "attributes": attributes or FULL_ATTRIBUTES}}, accept=DATACITE_ACCEPT)
    if xml:
        seed(REGISTRY_SEARCH, SEARCH_XML, accept="application/xml")
        seed(REGISTRY_RECORD, RECORD_XML, accept="application/xml")
