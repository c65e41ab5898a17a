from qind.cli import app

app(prog_name="qind")
