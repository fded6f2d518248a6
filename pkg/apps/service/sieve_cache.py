"""
체 블록 카운트 파일 캐시

형식 (모두 little-endian 64-bit):
    magic  8바이트 b'LGNTSIEV'
    sections                  (int64)
    섹션마다:
        limit, block_size, count  (int64 x 3)
        counts                    (int64 x count)

섹션은 block_size 별로 하나씩 둔다. chiliad(1000) 와 myriad(10000) 를 번갈아 저장해도 서로 지우지 않는다.
같은 block_size 이고 저장된 limit 이 요청 limit 이상이면 앞부분을 잘라 쓴다.
파일이 없거나 깨졌으면 None 을 돌려주고 다시 체질한다.
"""
import logging
import struct
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

MAGIC = b'LGNTSIEV'
_FILE_HEADER = struct.Struct('<8sq')
_SECTION_HEADER = struct.Struct('<qqq')

# block_size → (limit, counts)
Sections = dict[int, tuple[int, np.ndarray]]

# 메모리 캐시: 경로 → 섹션
_memory_cache: dict[str, Sections] = {}


def _parse_sections(raw: bytes, path: Path) -> Sections | None:
    if len(raw) < _FILE_HEADER.size:
        logger.warning("체 캐시 헤더가 짧습니다 → 무시: %s", path)
        return None
    magic, section_count = _FILE_HEADER.unpack_from(raw)
    if magic != MAGIC or section_count < 0:
        logger.warning("체 캐시 형식 불일치 → 무시: %s", path)
        return None
    sections: Sections = {}
    offset = _FILE_HEADER.size
    for _ in range(section_count):
        if len(raw) < offset + _SECTION_HEADER.size:
            logger.warning("체 캐시 섹션 헤더가 잘렸습니다 → 무시: %s", path)
            return None
        limit, block_size, count = _SECTION_HEADER.unpack_from(raw, offset)
        offset += _SECTION_HEADER.size
        if block_size <= 0 or count < 0 or limit != count * block_size or block_size in sections:
            logger.warning("체 캐시 형식 불일치 → 무시: %s", path)
            return None
        end = offset + 8 * count
        if len(raw) < end:
            logger.warning("체 캐시 길이 불일치 (기대 %s, 실제 %s) → 무시: %s", end, len(raw), path)
            return None
        sections[block_size] = (limit, np.frombuffer(raw[offset:end], dtype='<i8').astype(np.int64))
        offset = end
    if offset != len(raw):
        logger.warning("체 캐시 길이 불일치 (기대 %s, 실제 %s) → 무시: %s", offset, len(raw), path)
        return None
    return sections


def _read_cache_file(path: Path) -> Sections | None:
    """캐시 파일 전체 로드. 없거나 형식이 맞지 않으면 None"""
    if not path.exists():
        return None
    try:
        raw = path.read_bytes()
    except OSError as e:
        logger.warning("체 캐시 읽기 실패 (%s): %s", path, e)
        return None
    return _parse_sections(raw, path)


def load_sections(path) -> Sections:
    """파일의 모든 섹션 (없거나 깨졌으면 빈 dict)"""
    if not path:
        return {}
    path = Path(path)
    key = str(path.resolve())
    cached = _memory_cache.get(key)
    if cached is None:
        cached = _read_cache_file(path)
        if cached is None:
            return {}
        _memory_cache[key] = cached
    return cached


def load_block_counts(path, limit: int, block_size: int) -> np.ndarray | None:
    """limit/block_size 에 맞는 블록 카운트. 쓸 수 없으면 None"""
    section = load_sections(path).get(block_size)
    if section is None:
        return None
    cached_limit, counts = section
    if cached_limit < limit:
        return None
    return counts[: limit // block_size].copy()


def save_block_counts(path, limit: int, block_size: int, counts) -> None:
    """block_size 섹션만 교체해 저장 (다른 블록 크기 섹션은 유지)"""
    if not path:
        return
    path = Path(path)
    counts = np.asarray(counts, dtype='<i8')
    sections = dict(load_sections(path))
    previous = sections.get(block_size)
    if previous is not None and previous[0] > limit:
        logger.info("체 캐시에 더 긴 섹션이 있어 유지: block=%s, limit=%s", block_size, previous[0])
        return
    sections[block_size] = (limit, counts.astype(np.int64))

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'wb') as f:
        f.write(_FILE_HEADER.pack(MAGIC, len(sections)))
        for size in sorted(sections):
            section_limit, section_counts = sections[size]
            f.write(_SECTION_HEADER.pack(section_limit, size, len(section_counts)))
            f.write(np.asarray(section_counts, dtype='<i8').tobytes())
    _memory_cache[str(path.resolve())] = sections
    logger.info("체 캐시 저장: %s (limit=%s, block=%s, 섹션 %s개)", path, limit, block_size, len(sections))


def clear_memory_cache() -> None:
    _memory_cache.clear()
