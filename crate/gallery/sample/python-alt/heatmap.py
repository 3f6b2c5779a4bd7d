import altair as alt

cars = "data/cars.csv"

base = alt.Chart(cars).transform_aggregate(
    mean_mpg="mean(mpg)",
    groupby=["cylinders", "origin"],
).encode(
    x="cylinders:O",
    y="origin:N",
)
rect = base.mark_rect().encode(color=alt.Color("mean_mpg:Q", title="mean mpg"))
text = base.mark_text().encode(text=alt.Text("mean_mpg:Q", format=".1f"))
rect + text
