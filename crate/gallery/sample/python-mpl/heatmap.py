import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
means = cars.pivot_table(index="origin", columns="cylinders", values="mpg", aggfunc="mean")
fig, ax = plt.subplots()
im = ax.imshow(means.values, aspect="auto")
ax.set_xticks(range(len(means.columns)), labels=means.columns)
ax.set_yticks(range(len(means.index)), labels=means.index)
for i in range(len(means.index)):
    for j in range(len(means.columns)):
        value = means.values[i, j]
        if value == value:
            ax.text(j, i, f"{value:.1f}", ha="center", va="center")
fig.colorbar(im, ax=ax, label="mean mpg")
plt.show()
