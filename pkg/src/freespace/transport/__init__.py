# src/freespace/transport/__init__.py
from src.freespace.transport.models.transport_plan import TransportPlan
from src.freespace.transport.solve_transport import solve_transport

__all__ = ["TransportPlan", "solve_transport"]
