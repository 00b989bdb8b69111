import json
from typing import Any, List, Optional

from pydantic import BaseModel


class CommandContext(BaseModel):
    max_steps: int = 8
    tie_break: str = "begin"
    alphabet: Optional[List[str]] = None
    json_output: bool = False
    output: List[str] = []

    def emit(self, text: str) -> None:
        self.output.append(text)

    def emit_json(self, document: Any) -> None:
        if isinstance(document, BaseModel):
            self.output.append(document.model_dump_json(indent=2))
        else:
            self.output.append(json.dumps(document, indent=2, ensure_ascii=False, default=str))

    def alphabet_set(self) -> Optional[set[str]]:
        return None if self.alphabet is None else set(self.alphabet)
