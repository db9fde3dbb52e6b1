from pathlib import Path

OUT = Path(__file__).parent / "out"


def save(name: str, text: str) -> Path:
    OUT.mkdir(exist_ok=True)
    path = OUT / name
    path.write_text(text)
    print(f"  wrote {path}")
    return path
