import json

import pytest

from vkgroups.encoder import Encoder, JSONEncoder, get_encoder, read_document, set_encoder
from vkgroups.errors import DecodeError


class SortedJSONEncoder(Encoder):
    def encode(self, data):
        return json.dumps(data, sort_keys=True).encode("utf-8")

    def decode(self, data):
        return json.loads(data)


@pytest.fixture
def sorted_encoder():
    old_encoder = get_encoder()
    new_encoder = SortedJSONEncoder()
    set_encoder(new_encoder)
    yield new_encoder
    set_encoder(old_encoder)


def test_set_encoder_sets_the_global_encoder(sorted_encoder):
    # Given that I've set a custom encoder as the global encoder
    # When I get the global encoder
    encoder = get_encoder()

    # Then it should be the same as the encoder that was set
    assert encoder == sorted_encoder


def test_json_encoder_is_compact():
    assert JSONEncoder().encode({"a": [1, 2], "b": "Z^2"}) == b'{"a":[1,2],"b":"Z^2"}'


@pytest.mark.parametrize("given", [b"\xff\xfe", b"{", b"[1, 2"])
def test_json_encoder_raises_decode_errors(given):
    with pytest.raises(DecodeError):
        JSONEncoder().decode(given)


def test_documents_are_read_with_the_global_encoder(tmp_path, sorted_encoder):
    # Given a document on disk
    path = tmp_path / "p.json"
    path.write_text('{"generators": ["x"], "relators": []}')

    # When I read it
    data = read_document(str(path))

    # Then I should get its contents back
    assert data == {"generators": ["x"], "relators": []}


def test_missing_documents_raise_decode_errors(tmp_path):
    with pytest.raises(DecodeError):
        read_document(str(tmp_path / "missing.json"))
